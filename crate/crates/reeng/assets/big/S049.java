public class S049 extends Abstract17 {
    public void open() {
        try {
            try {
                switch (event) {
                    case EV0:
                        new S006();
                        send("msg5");
                        new S084();
                        break;
                    case EV1:
                        new S046();
                        new S030();
                        break;
                    default:
                        send("msg5");
                        break;
                }
            } finally {
                log("trace");
                send("msg3");
            }
            send("msg4");
            switch (event) {
                case EV1:
                    log("trace");
                    new Abstract17();
                    new S092();
                    break;
            }
        } finally {
            update();
            new S006();
        }
        send("msg1");
        new S028();
    }

    public void close() {
        try {
            update();
            send("msg2");
        } catch (IllegalStateException e) {
            send("msg3");
            new S072();
            if (counter > 9) {
                try {
                    log("trace");
                    new S097();
                    send("msg2");
                } catch (TimeoutException e) {
                    send("msg2");
                    new Abstract11();
                    send("msg1");
                } catch (IllegalStateException e) {
                    update();
                    log("trace");
                    send("msg6");
                }
                try {
                    new S032();
                } catch (TimeoutException e) {
                    send("msg2");
                    new S078();
                    send("msg3");
                } catch (IllegalStateException e) {
                    new S004();
                    new Abstract1();
                }
            }
        } catch (IOException e) {
            update();
        }
        try {
            new Abstract7();
        } catch (IOException e) {
            send("msg3");
            try {
                update();
                send("msg6");
                log("trace");
            } catch (IOException e) {
                log("trace");
                update();
            } catch (IllegalStateException e) {
                log("trace");
                try {
                    send("msg1");
                    new S086();
                    update();
                } finally {
                    new S071();
                    send("msg3");
                    new S060();
                }
            }
        }
    }

    public void start() {
        new S069();
        update();
    }

    public void stop() {
        new S088();
        log("trace");
        new S032();
    }

    public void tick() {
        new S032();
        send("msg1");
    }

    public void reset() {
        new S064();
        send("msg5");
    }

    public void pause() {
        if (counter > 1) {
            switch (event) {
                case EV0:
                    try {
                        send("msg3");
                    } finally {
                        new S056();
                        send("msg7");
                        send("msg0");
                    }
                    send("msg6");
                    new Abstract13();
                    break;
                case EV4:
                    try {
                        new S005();
                        send("msg7");
                        send("msg3");
                    } finally {
                        new S053();
                        new S063();
                    }
                    update();
                    break;
                case EV1:
                    new S089();
                    break;
            }
            switch (event) {
                case EV2:
                    send("msg7");
                    break;
            }
        } else {
            try {
                send("msg7");
                send("msg0");
                new S007();
            } finally {
                send("msg1");
                switch (event) {
                    case EV2:
                        new S029();
                        new S041();
                        new S051();
                        break;
                    case EV0:
                        new Abstract23();
                        new S036();
                        break;
                }
                send("msg0");
            }
            if (counter > 1) {
                send("msg4");
                log("trace");
            } else {
                send("msg1");
            }
            switch (event) {
                case EV4:
                    try {
                        new Abstract11();
                        new Helper();
                        new Abstract9();
                    } catch (TimeoutException e) {
                        new S034();
                    } catch (IllegalStateException e) {
                        send("msg3");
                    }
                    break;
                case EV0:
                    new S020();
                    break;
                case EV3:
                    send("msg4");
                    update();
                    break;
            }
        }
        send("msg0");
    }

    public void resume() {
        new S078();
    }

    public void load() {
        send("msg7");
    }

    public void save() {
        send("msg3");
    }
}

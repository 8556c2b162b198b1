public class S032 extends Abstract7 {
    public void open() {
        update();
    }

    public void close() {
        log("trace");
        send("msg2");
        update();
    }

    public void start() {
        new S052();
    }

    public void stop() {
        new S022();
        send("msg7");
    }

    public void tick() {
        try {
            send("msg3");
            if (counter > 9) {
                try {
                    send("msg7");
                    new S088();
                    new Abstract11();
                } finally {
                    new S036();
                }
                send("msg5");
            }
            new S074();
        } catch (IOException e) {
            update();
            switch (event) {
                case EV2:
                    log("trace");
                    new S022();
                    break;
            }
            send("msg1");
        } finally {
            switch (event) {
                case EV1:
                    send("msg2");
                    try {
                        new S039();
                    } catch (TimeoutException e) {
                        send("msg7");
                    } catch (IOException e) {
                        send("msg7");
                    } finally {
                        new S094();
                        new S029();
                    }
                    send("msg4");
                    break;
                case EV0:
                    new S096();
                    log("trace");
                    break;
            }
            switch (event) {
                case EV3:
                    new S066();
                    try {
                        send("msg6");
                        new S009();
                    } catch (IOException e) {
                        new S048();
                    }
                    break;
                case EV4:
                    if (counter > 4) {
                        send("msg3");
                    }
                    break;
                case EV0:
                    new S084();
                    break;
                default:
                    update();
                    switch (event) {
                        case EV5:
                            send("msg1");
                            send("msg4");
                            break;
                        case EV4:
                            send("msg6");
                            new S068();
                            new Abstract6();
                            break;
                    }
                    switch (event) {
                        case EV4:
                            send("msg5");
                            break;
                    }
                    break;
            }
        }
        send("msg6");
        try {
            switch (event) {
                case EV3:
                    send("msg6");
                    if (counter > 8) {
                        log("trace");
                        send("msg4");
                        send("msg0");
                    }
                    new S023();
                    break;
            }
            if (counter > 6) {
                send("msg5");
                send("msg0");
                send("msg5");
            }
        } catch (IllegalStateException e) {
            if (counter > 0) {
                new S035();
                new S039();
                new S044();
            } else {
                send("msg2");
            }
        } catch (TimeoutException e) {
            send("msg5");
        } finally {
            send("msg2");
        }
    }

    public void reset() {
        if (counter > 2) {
            if (counter > 8) {
                log("trace");
                send("msg5");
            } else {
                try {
                    new S059();
                    update();
                    log("trace");
                } catch (IllegalStateException e) {
                    send("msg4");
                } finally {
                    update();
                    update();
                }
            }
        }
        send("msg3");
        send("msg3");
    }

    public void pause() {
        send("msg4");
    }

    public void resume() {
        log("trace");
        if (counter > 5) {
            try {
                send("msg6");
            } finally {
                try {
                    new S068();
                    send("msg4");
                    send("msg4");
                } catch (TimeoutException e) {
                    new Abstract8();
                } finally {
                    send("msg3");
                    log("trace");
                    new S057();
                }
            }
        } else {
            new S096();
            switch (event) {
                case EV2:
                    try {
                        new S051();
                    } finally {
                        new S001();
                        new S050();
                    }
                    new S078();
                    send("msg3");
                    break;
            }
            log("trace");
        }
    }

    public void load() {
        send("msg5");
    }

    public void save() {
        new Abstract22();
        try {
            switch (event) {
                case EV3:
                    send("msg2");
                    break;
            }
            log("trace");
        } catch (IOException e) {
            new S023();
        }
        new S050();
    }
}

public class S013 extends State {
    public void open() {
        log("trace");
        if (counter > 0) {
            if (counter > 1) {
                new S006();
                if (counter > 0) {
                    send("msg0");
                    send("msg7");
                    send("msg7");
                } else {
                    new S011();
                    update();
                    update();
                }
                if (counter > 0) {
                    update();
                    send("msg2");
                    new S086();
                }
            } else {
                send("msg1");
                log("trace");
            }
            switch (event) {
                case EV0:
                    send("msg3");
                    break;
            }
        } else {
            send("msg2");
            send("msg5");
            send("msg2");
        }
    }

    public void close() {
        new S038();
        if (counter > 0) {
            update();
            send("msg4");
        }
        try {
            try {
                try {
                    send("msg6");
                    send("msg1");
                    send("msg4");
                } catch (IllegalStateException e) {
                    send("msg6");
                    update();
                    new S059();
                } catch (TimeoutException e) {
                    new Abstract21();
                } finally {
                    new S099();
                }
            } catch (TimeoutException e) {
                send("msg0");
            }
            log("trace");
        } catch (TimeoutException e) {
            if (counter > 2) {
                new S021();
            }
            new S059();
            update();
        }
    }

    public void start() {
        switch (event) {
            case EV3:
                send("msg5");
                if (counter > 7) {
                    new S022();
                    try {
                        new S054();
                    } catch (IllegalStateException e) {
                        send("msg5");
                        new S050();
                    } finally {
                        send("msg0");
                        send("msg7");
                    }
                }
                break;
        }
        new S069();
        try {
            send("msg0");
            new S050();
            try {
                new S030();
                send("msg0");
            } finally {
                log("trace");
                update();
            }
        } finally {
            if (counter > 9) {
                new S055();
                new S076();
                switch (event) {
                    case EV0:
                        send("msg7");
                        send("msg6");
                        break;
                    default:
                        new S079();
                        new S001();
                        break;
                }
            } else {
                log("trace");
            }
        }
    }

    public void stop() {
        log("trace");
    }

    public void tick() {
        new S002();
        switch (event) {
            case EV4:
                try {
                    if (counter > 2) {
                        new Abstract13();
                        send("msg2");
                    } else {
                        new Abstract20();
                        update();
                        send("msg4");
                    }
                } catch (IllegalStateException e) {
                    new S072();
                } finally {
                    log("trace");
                    try {
                        log("trace");
                        send("msg4");
                        update();
                    } catch (TimeoutException e) {
                        new S042();
                        new Abstract18();
                    } catch (IllegalStateException e) {
                        send("msg5");
                    }
                }
                if (counter > 9) {
                    new S033();
                    send("msg3");
                } else {
                    send("msg1");
                    if (counter > 4) {
                        new S010();
                        new S071();
                    }
                    send("msg4");
                }
                break;
            case EV0:
                new S015();
                break;
            case EV5:
                send("msg4");
                switch (event) {
                    case EV2:
                        send("msg0");
                        update();
                        send("msg2");
                        break;
                }
                try {
                    try {
                        send("msg5");
                    } catch (IllegalStateException e) {
                        send("msg1");
                        send("msg1");
                        update();
                    }
                } finally {
                    try {
                        send("msg6");
                    } catch (TimeoutException e) {
                        new S063();
                        new S057();
                        new S024();
                    }
                }
                break;
        }
    }

    public void reset() {
        send("msg5");
        try {
            new S023();
            new S025();
        } catch (IllegalStateException e) {
            update();
            log("trace");
        } catch (TimeoutException e) {
            update();
        }
    }

    public void pause() {
        send("msg2");
    }

    public void resume() {
        send("msg1");
        new Abstract4();
        send("msg1");
    }

    public void load() {
        new S061();
        send("msg4");
    }

    public void save() {
        send("msg4");
    }
}

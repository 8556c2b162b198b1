public class S021 extends State {
    public void open() {
        try {
            new S034();
            if (counter > 3) {
                log("trace");
            }
            try {
                update();
            } catch (TimeoutException e) {
                update();
                switch (event) {
                    case EV2:
                        send("msg4");
                        break;
                    case EV4:
                        new S063();
                        new S053();
                        break;
                }
            }
        } finally {
            send("msg3");
        }
    }

    public void close() {
        send("msg2");
    }

    public void start() {
        if (counter > 0) {
            send("msg6");
            send("msg7");
        }
        try {
            send("msg7");
            log("trace");
            try {
                if (counter > 0) {
                    new S005();
                }
                new S036();
            } catch (TimeoutException e) {
                new S078();
                send("msg3");
            } catch (IllegalStateException e) {
                new S031();
                new S027();
            } finally {
                if (counter > 7) {
                    send("msg0");
                } else {
                    send("msg7");
                }
                new S084();
            }
        } catch (IllegalStateException e) {
            if (counter > 6) {
                if (counter > 7) {
                    new S078();
                    log("trace");
                    send("msg0");
                } else {
                    log("trace");
                }
                try {
                    update();
                    log("trace");
                } catch (IllegalStateException e) {
                    new S003();
                } catch (IOException e) {
                    send("msg3");
                    send("msg4");
                } finally {
                    send("msg5");
                    new S096();
                    new S019();
                }
                new S013();
            } else {
                new S056();
                log("trace");
                new S030();
            }
            send("msg0");
            update();
        } finally {
            new S079();
        }
    }

    public void stop() {
        switch (event) {
            case EV2:
                update();
                switch (event) {
                    case EV2:
                        send("msg6");
                        try {
                            new S042();
                            log("trace");
                        } finally {
                            send("msg4");
                        }
                        break;
                    case EV4:
                        if (counter > 3) {
                            send("msg4");
                            new Abstract18();
                            send("msg4");
                        } else {
                            log("trace");
                            new S092();
                            update();
                        }
                        try {
                            send("msg1");
                            send("msg0");
                        } catch (TimeoutException e) {
                            log("trace");
                            send("msg1");
                        } catch (IOException e) {
                            send("msg2");
                            new S035();
                        }
                        new Abstract14();
                        break;
                    default:
                        send("msg7");
                        break;
                }
                send("msg6");
                break;
            default:
                send("msg3");
                try {
                    update();
                    if (counter > 7) {
                        new S058();
                        new S031();
                        send("msg5");
                    }
                    log("trace");
                } finally {
                    new S023();
                    new S097();
                    send("msg1");
                }
                break;
        }
    }

    public void tick() {
        new S014();
        new S043();
        send("msg5");
    }

    public void reset() {
        if (counter > 7) {
            new S096();
            switch (event) {
                case EV2:
                    new S074();
                    new S039();
                    break;
                case EV4:
                    new S078();
                    new Abstract2();
                    break;
            }
        }
    }

    public void pause() {
        new S014();
    }

    public void resume() {
        send("msg5");
    }

    public void load() {
        log("trace");
    }

    public void save() {
        try {
            if (counter > 7) {
                switch (event) {
                    case EV3:
                        new S050();
                        new S081();
                        send("msg1");
                        break;
                }
            }
        } finally {
            switch (event) {
                case EV4:
                    new S034();
                    new S012();
                    switch (event) {
                        case EV4:
                            send("msg6");
                            send("msg6");
                            send("msg2");
                            break;
                    }
                    break;
                case EV1:
                    send("msg5");
                    send("msg2");
                    send("msg7");
                    break;
                case EV3:
                    new S003();
                    break;
            }
        }
        if (counter > 0) {
            send("msg6");
        } else {
            update();
        }
    }
}

public class S081 extends State {
    public void open() {
        try {
            log("trace");
            send("msg7");
        } catch (IllegalStateException e) {
            new S050();
            update();
            log("trace");
        }
        send("msg7");
        new S091();
    }

    public void close() {
        switch (event) {
            case EV4:
                send("msg0");
                send("msg1");
                new Abstract9();
                break;
            case EV1:
                log("trace");
                break;
            case EV2:
                new S042();
                send("msg0");
                update();
                break;
        }
        new Abstract16();
        try {
            switch (event) {
                case EV4:
                    switch (event) {
                        case EV2:
                            update();
                            send("msg7");
                            break;
                    }
                    new S015();
                    break;
                case EV0:
                    send("msg7");
                    break;
                case EV1:
                    new S061();
                    break;
                default:
                    if (counter > 8) {
                        send("msg5");
                    }
                    break;
            }
        } catch (IllegalStateException e) {
            send("msg6");
            new S021();
        } finally {
            send("msg2");
            if (counter > 9) {
                new S022();
            }
            switch (event) {
                case EV4:
                    try {
                        update();
                        new S097();
                    } catch (IllegalStateException e) {
                        log("trace");
                        new S076();
                    } catch (TimeoutException e) {
                        send("msg0");
                        log("trace");
                    } finally {
                        send("msg0");
                        send("msg2");
                    }
                    break;
                case EV0:
                    new S062();
                    send("msg1");
                    switch (event) {
                        case EV2:
                            new S067();
                            new S072();
                            send("msg3");
                            break;
                        case EV5:
                            new S086();
                            break;
                    }
                    break;
            }
        }
    }

    public void start() {
        new S085();
    }

    public void stop() {
        new S061();
    }

    public void tick() {
        update();
        send("msg4");
    }

    public void reset() {
        if (counter > 2) {
            if (counter > 0) {
                send("msg2");
                update();
            } else {
                new S018();
            }
        }
        new S058();
        send("msg3");
    }

    public void pause() {
        new S013();
    }

    public void resume() {
        send("msg3");
        new S038();
        new S015();
    }

    public void load() {
        if (counter > 2) {
            new S062();
            if (counter > 6) {
                send("msg2");
                try {
                    new S083();
                } finally {
                    new S023();
                    new S004();
                }
                try {
                    new S080();
                } catch (IllegalStateException e) {
                    log("trace");
                    log("trace");
                } finally {
                    update();
                }
            } else {
                switch (event) {
                    case EV1:
                        new S017();
                        send("msg1");
                        new S041();
                        break;
                    case EV4:
                        update();
                        break;
                    default:
                        new S042();
                        break;
                }
                try {
                    new S004();
                    new S032();
                } catch (IllegalStateException e) {
                    send("msg1");
                } catch (IOException e) {
                    send("msg6");
                    log("trace");
                } finally {
                    send("msg6");
                }
            }
        }
        send("msg5");
    }

    public void save() {
        send("msg1");
        send("msg4");
    }
}

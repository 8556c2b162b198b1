public class S027 extends Abstract11 {
    public void open() {
        try {
            new S009();
            update();
        } catch (TimeoutException e) {
            switch (event) {
                case EV4:
                    update();
                    new S065();
                    break;
                case EV0:
                    switch (event) {
                        case EV3:
                            send("msg5");
                            break;
                        case EV1:
                            log("trace");
                            new S091();
                            log("trace");
                            break;
                    }
                    if (counter > 0) {
                        new S029();
                    }
                    break;
                case EV5:
                    update();
                    new S052();
                    break;
            }
        } finally {
            new Abstract19();
            new S001();
            switch (event) {
                case EV1:
                    send("msg6");
                    update();
                    break;
                case EV2:
                    if (counter > 3) {
                        send("msg2");
                        new Abstract14();
                        update();
                    }
                    break;
                default:
                    try {
                        update();
                        update();
                    } catch (IOException e) {
                        send("msg3");
                        update();
                    } catch (IllegalStateException e) {
                        send("msg1");
                        send("msg2");
                    }
                    break;
            }
        }
    }

    public void close() {
        switch (event) {
            case EV4:
                send("msg0");
                send("msg2");
                break;
            case EV0:
                new S031();
                new Abstract3();
                send("msg3");
                break;
            case EV1:
                new S096();
                log("trace");
                try {
                    send("msg6");
                } catch (IllegalStateException e) {
                    send("msg0");
                } catch (IOException e) {
                    switch (event) {
                        case EV5:
                            new Helper();
                            new S000();
                            break;
                        case EV0:
                            new S088();
                            new S041();
                            break;
                        case EV4:
                            new S029();
                            send("msg2");
                            new S066();
                            break;
                        default:
                            update();
                            break;
                    }
                } finally {
                    new S068();
                    update();
                    new S047();
                }
                break;
        }
        update();
        send("msg4");
    }

    public void start() {
        if (counter > 0) {
            switch (event) {
                case EV1:
                    send("msg3");
                    send("msg0");
                    break;
                case EV2:
                    switch (event) {
                        case EV0:
                            send("msg0");
                            update();
                            send("msg6");
                            break;
                        case EV2:
                            log("trace");
                            break;
                        case EV4:
                            send("msg1");
                            send("msg6");
                            new S097();
                            break;
                    }
                    send("msg3");
                    new S003();
                    break;
            }
        } else {
            try {
                new S030();
                new S073();
            } catch (TimeoutException e) {
                send("msg1");
                new S073();
                if (counter > 5) {
                    update();
                    send("msg1");
                    update();
                }
            } catch (IllegalStateException e) {
                send("msg1");
                send("msg1");
            }
            update();
            send("msg6");
        }
        new S007();
        new S044();
    }

    public void stop() {
        send("msg5");
        log("trace");
    }

    public void tick() {
        if (counter > 6) {
            switch (event) {
                case EV3:
                    new S080();
                    break;
            }
        }
        send("msg0");
    }

    public void reset() {
        switch (event) {
            case EV2:
                try {
                    new S011();
                    new S001();
                } catch (IllegalStateException e) {
                    send("msg0");
                    new S063();
                    new S030();
                } finally {
                    send("msg3");
                    new S037();
                    if (counter > 1) {
                        send("msg1");
                    }
                }
                break;
            default:
                new S046();
                break;
        }
    }

    public void pause() {
        new S074();
        update();
        send("msg6");
    }

    public void resume() {
        try {
            try {
                send("msg0");
                try {
                    new S072();
                    send("msg7");
                } catch (TimeoutException e) {
                    new S086();
                }
            } finally {
                new S061();
                if (counter > 2) {
                    send("msg5");
                }
            }
        } catch (IllegalStateException e) {
            send("msg3");
            new S087();
            send("msg6");
        } finally {
            try {
                send("msg7");
                send("msg0");
            } catch (TimeoutException e) {
                send("msg4");
                switch (event) {
                    case EV0:
                        send("msg0");
                        break;
                }
                send("msg3");
            } catch (IOException e) {
                log("trace");
                send("msg5");
            }
        }
    }

    public void load() {
        send("msg0");
    }

    public void save() {
        if (counter > 3) {
            send("msg2");
        }
    }
}

public class S053 extends State {
    public void open() {
        try {
            switch (event) {
                case EV4:
                    new S009();
                    send("msg6");
                    new S060();
                    break;
                case EV3:
                    send("msg6");
                    break;
            }
            update();
            update();
        } catch (IOException e) {
            send("msg3");
            if (counter > 5) {
                new S088();
            } else {
                try {
                    new S030();
                    new S029();
                } catch (IllegalStateException e) {
                    send("msg6");
                    new S013();
                } catch (IOException e) {
                    new S024();
                    send("msg7");
                }
            }
        }
    }

    public void close() {
        try {
            log("trace");
            new S023();
        } catch (IOException e) {
            new Abstract14();
            send("msg4");
            new S000();
        } catch (IllegalStateException e) {
            new S011();
        }
    }

    public void start() {
        try {
            log("trace");
            try {
                try {
                    new S098();
                    new S002();
                    new Abstract18();
                } catch (IOException e) {
                    new S015();
                    log("trace");
                } catch (TimeoutException e) {
                    send("msg3");
                }
            } finally {
                if (counter > 8) {
                    new S091();
                    update();
                    send("msg0");
                } else {
                    update();
                    new S083();
                }
                switch (event) {
                    case EV2:
                        update();
                        send("msg2");
                        break;
                    case EV0:
                        send("msg6");
                        break;
                    case EV3:
                        update();
                        new S003();
                        break;
                }
                update();
            }
        } catch (IOException e) {
            new S011();
            update();
        }
    }

    public void stop() {
        send("msg5");
        switch (event) {
            case EV2:
                if (counter > 6) {
                    new S012();
                    send("msg0");
                    log("trace");
                }
                send("msg6");
                switch (event) {
                    case EV2:
                        switch (event) {
                            case EV0:
                                new Abstract8();
                                new S044();
                                new S000();
                                break;
                        }
                        send("msg4");
                        if (counter > 3) {
                            send("msg3");
                            update();
                            new S039();
                        } else {
                            send("msg4");
                            send("msg1");
                            send("msg5");
                        }
                        break;
                }
                break;
        }
        try {
            send("msg5");
        } finally {
            send("msg0");
            send("msg6");
        }
    }

    public void tick() {
        send("msg7");
    }

    public void reset() {
        new S034();
        try {
            send("msg0");
            switch (event) {
                case EV1:
                    switch (event) {
                        case EV3:
                            new S079();
                            update();
                            break;
                        case EV5:
                            send("msg1");
                            new S028();
                            break;
                        default:
                            update();
                            send("msg7");
                            new S040();
                            break;
                    }
                    break;
                default:
                    update();
                    send("msg3");
                    break;
            }
        } catch (IllegalStateException e) {
            if (counter > 3) {
                send("msg3");
                send("msg7");
            }
        }
    }

    public void pause() {
        switch (event) {
            case EV0:
                if (counter > 5) {
                    switch (event) {
                        case EV3:
                            update();
                            new S001();
                            send("msg5");
                            break;
                        case EV4:
                            new S083();
                            new S075();
                            send("msg4");
                            break;
                        case EV5:
                            log("trace");
                            break;
                    }
                    update();
                    switch (event) {
                        case EV0:
                            new Abstract8();
                            break;
                        case EV3:
                            send("msg6");
                            new S007();
                            new S031();
                            break;
                    }
                }
                break;
            case EV2:
                send("msg2");
                send("msg5");
                break;
            case EV3:
                if (counter > 7) {
                    send("msg7");
                }
                update();
                new S061();
                break;
        }
    }

    public void resume() {
        switch (event) {
            case EV5:
                update();
                new S017();
                break;
            case EV1:
                send("msg6");
                break;
        }
    }

    public void load() {
        if (counter > 0) {
            log("trace");
            new S028();
            new S087();
        }
    }

    public void save() {
        new S063();
    }
}

public class S005 extends State {
    public void open() {
        new Abstract7();
        new S018();
    }

    public void close() {
        new S093();
    }

    public void start() {
        new S036();
        switch (event) {
            case EV4:
                if (counter > 0) {
                    new S084();
                }
                break;
            case EV1:
                new S000();
                break;
        }
        new S046();
    }

    public void stop() {
        new Abstract21();
        send("msg0");
    }

    public void tick() {
        new S024();
    }

    public void reset() {
        send("msg0");
        switch (event) {
            case EV2:
                switch (event) {
                    case EV0:
                        if (counter > 9) {
                            log("trace");
                            new S086();
                            new S014();
                        }
                        new S098();
                        break;
                    case EV3:
                        switch (event) {
                            case EV2:
                                new S040();
                                break;
                            case EV0:
                                new S094();
                                break;
                        }
                        log("trace");
                        break;
                    case EV5:
                        try {
                            new Abstract21();
                        } catch (TimeoutException e) {
                            new Abstract20();
                            new S081();
                            new S095();
                        } catch (IllegalStateException e) {
                            send("msg7");
                            new S065();
                        }
                        send("msg1");
                        break;
                }
                break;
            case EV5:
                try {
                    switch (event) {
                        case EV2:
                            send("msg2");
                            send("msg5");
                            send("msg3");
                            break;
                    }
                    new S079();
                    switch (event) {
                        case EV1:
                            new S043();
                            update();
                            new S043();
                            break;
                        case EV5:
                            send("msg0");
                            break;
                        case EV4:
                            log("trace");
                            send("msg7");
                            break;
                    }
                } catch (IOException e) {
                    send("msg7");
                    try {
                        new S001();
                    } catch (TimeoutException e) {
                        send("msg3");
                        send("msg4");
                    } finally {
                        log("trace");
                    }
                } catch (IllegalStateException e) {
                    if (counter > 8) {
                        send("msg4");
                        log("trace");
                    }
                }
                send("msg1");
                break;
            case EV3:
                send("msg3");
                break;
            default:
                try {
                    log("trace");
                } catch (IllegalStateException e) {
                    send("msg4");
                } catch (TimeoutException e) {
                    try {
                        new Abstract15();
                        log("trace");
                    } catch (IOException e) {
                        new S008();
                    } finally {
                        log("trace");
                        new S054();
                        log("trace");
                    }
                } finally {
                    log("trace");
                }
                new S044();
                try {
                    switch (event) {
                        case EV1:
                            send("msg4");
                            new S054();
                            update();
                            break;
                        case EV3:
                            new S069();
                            break;
                    }
                    try {
                        send("msg3");
                    } catch (IOException e) {
                        update();
                        new S091();
                    } catch (IllegalStateException e) {
                        send("msg1");
                        new S097();
                    }
                } catch (IllegalStateException e) {
                    if (counter > 0) {
                        new S079();
                        update();
                    }
                    log("trace");
                    new S046();
                } catch (TimeoutException e) {
                    log("trace");
                    try {
                        update();
                    } finally {
                        log("trace");
                    }
                }
                break;
        }
    }

    public void pause() {
        switch (event) {
            case EV0:
                switch (event) {
                    case EV5:
                        try {
                            update();
                        } catch (TimeoutException e) {
                            new S087();
                        } catch (IllegalStateException e) {
                            send("msg1");
                        }
                        break;
                    case EV1:
                        switch (event) {
                            case EV5:
                                send("msg5");
                                new S078();
                                break;
                            case EV4:
                                send("msg6");
                                break;
                            case EV0:
                                update();
                                update();
                                break;
                            default:
                                send("msg2");
                                new S078();
                                new S047();
                                break;
                        }
                        send("msg3");
                        send("msg6");
                        break;
                }
                break;
        }
        send("msg7");
        switch (event) {
            case EV0:
                new S000();
                break;
            default:
                switch (event) {
                    case EV4:
                        new Abstract8();
                        break;
                    case EV5:
                        send("msg0");
                        update();
                        break;
                    case EV3:
                        switch (event) {
                            case EV1:
                                new S039();
                                break;
                            default:
                                new S090();
                                send("msg3");
                                break;
                        }
                        break;
                }
                new S083();
                break;
        }
    }

    public void resume() {
        send("msg0");
    }

    public void load() {
        log("trace");
        send("msg2");
        new S060();
    }

    public void save() {
        new S013();
    }
}

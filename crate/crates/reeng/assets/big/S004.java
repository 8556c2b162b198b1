public class S004 extends Abstract24 {
    public void open() {
        send("msg0");
        new S033();
    }

    public void close() {
        new S086();
        if (counter > 8) {
            if (counter > 6) {
                try {
                    log("trace");
                } finally {
                    send("msg0");
                    update();
                    new S075();
                }
            }
            try {
                send("msg5");
                send("msg0");
            } catch (IllegalStateException e) {
                if (counter > 1) {
                    new Abstract7();
                    send("msg2");
                } else {
                    new S077();
                    new S089();
                }
                send("msg7");
            } finally {
                new S083();
                log("trace");
            }
            update();
        }
        if (counter > 8) {
            new S053();
            send("msg2");
            send("msg4");
        }
    }

    public void start() {
        try {
            switch (event) {
                case EV2:
                    switch (event) {
                        case EV1:
                            new S078();
                            new S093();
                            break;
                        case EV2:
                            new S050();
                            new S076();
                            break;
                        case EV0:
                            send("msg2");
                            update();
                            send("msg1");
                            break;
                    }
                    new Abstract22();
                    break;
                case EV0:
                    try {
                        send("msg2");
                        send("msg7");
                        update();
                    } catch (IOException e) {
                        send("msg1");
                    } catch (TimeoutException e) {
                        new S082();
                    }
                    break;
                case EV1:
                    send("msg4");
                    break;
            }
            send("msg6");
            if (counter > 2) {
                send("msg4");
            } else {
                new S095();
                send("msg6");
            }
        } catch (IOException e) {
            switch (event) {
                case EV5:
                    send("msg7");
                    new S030();
                    break;
                case EV2:
                    switch (event) {
                        case EV4:
                            update();
                            break;
                    }
                    new S047();
                    break;
            }
            update();
            send("msg7");
        }
        try {
            new Abstract9();
        } catch (IOException e) {
            switch (event) {
                case EV5:
                    if (counter > 6) {
                        log("trace");
                        send("msg0");
                    } else {
                        log("trace");
                        new S067();
                    }
                    break;
                case EV3:
                    send("msg0");
                    send("msg5");
                    break;
                case EV1:
                    switch (event) {
                        case EV3:
                            new S018();
                            send("msg4");
                            send("msg0");
                            break;
                        case EV2:
                            send("msg4");
                            new S099();
                            break;
                        case EV5:
                            send("msg2");
                            send("msg0");
                            break;
                    }
                    try {
                        send("msg3");
                        new S048();
                    } catch (TimeoutException e) {
                        log("trace");
                    } catch (IllegalStateException e) {
                        log("trace");
                        new S036();
                    }
                    send("msg7");
                    break;
            }
        } finally {
            send("msg7");
        }
    }

    public void stop() {
        if (counter > 2) {
            switch (event) {
                case EV4:
                    switch (event) {
                        case EV2:
                            send("msg4");
                            send("msg0");
                            break;
                        case EV4:
                            new S047();
                            new S002();
                            break;
                    }
                    if (counter > 2) {
                        new Abstract21();
                    }
                    send("msg3");
                    break;
            }
            new S013();
        }
        send("msg5");
    }

    public void tick() {
        send("msg2");
        log("trace");
    }

    public void reset() {
        send("msg4");
    }

    public void pause() {
        send("msg6");
        new S038();
    }

    public void resume() {
        new S076();
        new Abstract5();
        send("msg4");
    }

    public void load() {
        send("msg5");
    }

    public void save() {
        switch (event) {
            case EV0:
                if (counter > 2) {
                    update();
                    switch (event) {
                        case EV4:
                            new S093();
                            send("msg5");
                            new S093();
                            break;
                    }
                    send("msg3");
                }
                send("msg6");
                new S083();
                break;
            case EV5:
                switch (event) {
                    case EV1:
                        log("trace");
                        new S042();
                        if (counter > 0) {
                            new S084();
                        }
                        break;
                    case EV3:
                        new S002();
                        break;
                    case EV5:
                        new S062();
                        switch (event) {
                            case EV3:
                                send("msg6");
                                break;
                        }
                        break;
                    default:
                        send("msg2");
                        switch (event) {
                            case EV5:
                                update();
                                new S016();
                                break;
                            case EV3:
                                send("msg6");
                                break;
                            case EV4:
                                log("trace");
                                send("msg7");
                                send("msg7");
                                break;
                            default:
                                new S066();
                                break;
                        }
                        if (counter > 8) {
                            new S039();
                            send("msg0");
                        } else {
                            update();
                        }
                        break;
                }
                send("msg7");
                break;
        }
        update();
    }
}

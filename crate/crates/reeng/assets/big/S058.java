public class S058 extends State {
    public void open() {
        update();
        update();
        send("msg1");
    }

    public void close() {
        if (counter > 8) {
            log("trace");
            if (counter > 6) {
                new S080();
            } else {
                update();
                send("msg5");
            }
            send("msg7");
        }
        if (counter > 3) {
            new Abstract9();
            if (counter > 7) {
                new S091();
                switch (event) {
                    case EV1:
                        new S051();
                        log("trace");
                        break;
                }
            }
            switch (event) {
                case EV0:
                    try {
                        send("msg3");
                        new Helper();
                        send("msg3");
                    } finally {
                        send("msg3");
                        new Abstract4();
                        new S070();
                    }
                    send("msg4");
                    break;
            }
        } else {
            send("msg6");
        }
        if (counter > 1) {
            new S018();
            send("msg5");
        }
    }

    public void start() {
        switch (event) {
            case EV2:
                switch (event) {
                    case EV0:
                        send("msg2");
                        switch (event) {
                            case EV1:
                                send("msg2");
                                send("msg7");
                                break;
                            default:
                                log("trace");
                                break;
                        }
                        new S007();
                        break;
                    case EV1:
                        new S004();
                        log("trace");
                        switch (event) {
                            case EV5:
                                new S010();
                                send("msg3");
                                break;
                            case EV2:
                                send("msg0");
                                break;
                            case EV4:
                                log("trace");
                                send("msg0");
                                break;
                        }
                        break;
                    case EV5:
                        switch (event) {
                            case EV3:
                                send("msg0");
                                new Abstract20();
                                new S030();
                                break;
                            case EV1:
                                send("msg2");
                                send("msg7");
                                break;
                        }
                        break;
                }
                break;
            case EV5:
                send("msg5");
                break;
        }
        switch (event) {
            case EV5:
                new S071();
                log("trace");
                break;
            case EV1:
                new S002();
                if (counter > 6) {
                    new S044();
                    try {
                        new S064();
                        log("trace");
                        new S004();
                    } catch (IllegalStateException e) {
                        new S018();
                        send("msg7");
                        log("trace");
                    } catch (TimeoutException e) {
                        new S057();
                        send("msg1");
                        new Helper();
                    } finally {
                        send("msg0");
                    }
                    new S077();
                } else {
                    try {
                        send("msg4");
                        new S048();
                        log("trace");
                    } catch (IOException e) {
                        send("msg7");
                    } catch (TimeoutException e) {
                        new S002();
                        new S034();
                    }
                    if (counter > 6) {
                        new S001();
                        new S042();
                    }
                    switch (event) {
                        case EV1:
                            new S063();
                            send("msg7");
                            new S082();
                            break;
                        case EV5:
                            update();
                            break;
                        default:
                            new S056();
                            send("msg7");
                            break;
                    }
                }
                if (counter > 7) {
                    log("trace");
                    new S089();
                    switch (event) {
                        case EV2:
                            new S067();
                            break;
                    }
                }
                break;
            case EV3:
                send("msg0");
                send("msg3");
                break;
        }
    }

    public void stop() {
        new S075();
    }

    public void tick() {
        if (counter > 2) {
            new S035();
        } else {
            if (counter > 0) {
                send("msg0");
                if (counter > 5) {
                    send("msg7");
                    send("msg5");
                }
                switch (event) {
                    case EV0:
                        send("msg4");
                        break;
                    case EV3:
                        new S035();
                        new S098();
                        break;
                }
            } else {
                send("msg5");
                send("msg1");
            }
            if (counter > 7) {
                try {
                    send("msg0");
                } catch (TimeoutException e) {
                    send("msg3");
                } catch (IOException e) {
                    send("msg1");
                }
                send("msg7");
                send("msg0");
            }
            update();
        }
        send("msg4");
    }

    public void reset() {
        send("msg4");
        try {
            send("msg4");
            new S028();
            if (counter > 1) {
                send("msg3");
                log("trace");
                switch (event) {
                    case EV0:
                        log("trace");
                        break;
                    case EV2:
                        update();
                        new S009();
                        break;
                    case EV1:
                        new Abstract24();
                        log("trace");
                        new S051();
                        break;
                }
            } else {
                send("msg2");
                new S081();
                send("msg6");
            }
        } catch (IllegalStateException e) {
            new Abstract8();
            send("msg3");
            switch (event) {
                case EV4:
                    new S044();
                    new S076();
                    break;
            }
        } finally {
            switch (event) {
                case EV2:
                    new S038();
                    break;
            }
        }
    }

    public void pause() {
        update();
    }

    public void resume() {
        if (counter > 1) {
            if (counter > 6) {
                send("msg5");
            }
            if (counter > 5) {
                switch (event) {
                    case EV1:
                        send("msg0");
                        break;
                    case EV3:
                        send("msg2");
                        break;
                }
            } else {
                switch (event) {
                    case EV0:
                        send("msg0");
                        break;
                    default:
                        log("trace");
                        send("msg3");
                        send("msg3");
                        break;
                }
            }
        }
    }

    public void load() {
        new S026();
    }

    public void save() {
        send("msg5");
        update();
    }
}

public class S098 extends Abstract18 {
    public void open() {
        send("msg3");
        update();
        send("msg0");
    }

    public void close() {
        try {
            switch (event) {
                case EV2:
                    new S032();
                    break;
                case EV3:
                    new S047();
                    send("msg2");
                    break;
                case EV5:
                    new S095();
                    log("trace");
                    break;
                default:
                    new S020();
                    new S006();
                    try {
                        new S077();
                        new S010();
                        send("msg7");
                    } catch (IllegalStateException e) {
                        new S082();
                    } catch (TimeoutException e) {
                        new S085();
                    } finally {
                        send("msg7");
                        send("msg7");
                    }
                    break;
            }
            send("msg6");
        } catch (IllegalStateException e) {
            try {
                log("trace");
                send("msg6");
                if (counter > 6) {
                    log("trace");
                    new S009();
                    new Abstract20();
                } else {
                    new S057();
                    send("msg0");
                }
            } catch (TimeoutException e) {
                try {
                    new Abstract15();
                    new S037();
                } catch (TimeoutException e) {
                    update();
                } catch (IllegalStateException e) {
                    new S081();
                    log("trace");
                } finally {
                    new S063();
                }
                if (counter > 0) {
                    new S018();
                    log("trace");
                } else {
                    update();
                    send("msg7");
                    update();
                }
            } catch (IOException e) {
                if (counter > 7) {
                    new S004();
                    send("msg6");
                    update();
                } else {
                    new S088();
                }
                new S066();
                update();
            } finally {
                try {
                    update();
                } catch (IOException e) {
                    new S010();
                    new S068();
                    new Abstract21();
                }
                try {
                    new S063();
                    new Abstract23();
                    new S019();
                } finally {
                    new S046();
                }
                switch (event) {
                    case EV3:
                        new S097();
                        break;
                    case EV2:
                        send("msg5");
                        new S090();
                        new S090();
                        break;
                }
            }
            try {
                update();
            } catch (TimeoutException e) {
                send("msg7");
            } finally {
                new S088();
                new S045();
            }
        } finally {
            new S001();
        }
        new S044();
        new Abstract20();
    }

    public void start() {
        new S063();
        send("msg6");
    }

    public void stop() {
        switch (event) {
            case EV5:
                send("msg7");
                send("msg0");
                break;
            case EV0:
                if (counter > 7) {
                    update();
                }
                send("msg2");
                log("trace");
                break;
        }
        new S010();
        if (counter > 3) {
            try {
                new Abstract23();
            } catch (IllegalStateException e) {
                if (counter > 2) {
                    send("msg3");
                    new S040();
                    new Abstract19();
                }
                send("msg1");
            } catch (IOException e) {
                send("msg4");
            } finally {
                switch (event) {
                    case EV1:
                        send("msg4");
                        send("msg0");
                        send("msg7");
                        break;
                }
                update();
                new S020();
            }
            if (counter > 6) {
                send("msg3");
                send("msg6");
            }
        } else {
            send("msg5");
        }
    }

    public void tick() {
        try {
            new S051();
            log("trace");
        } catch (IllegalStateException e) {
            switch (event) {
                case EV2:
                    new S055();
                    break;
                case EV4:
                    update();
                    send("msg6");
                    send("msg3");
                    break;
                default:
                    new S018();
                    switch (event) {
                        case EV3:
                            send("msg2");
                            log("trace");
                            update();
                            break;
                        default:
                            send("msg5");
                            send("msg5");
                            break;
                    }
                    send("msg4");
                    break;
            }
            switch (event) {
                case EV2:
                    try {
                        update();
                    } finally {
                        new S094();
                        new S018();
                        update();
                    }
                    send("msg0");
                    break;
                case EV0:
                    switch (event) {
                        case EV1:
                            send("msg6");
                            new S054();
                            break;
                        case EV4:
                            send("msg0");
                            break;
                    }
                    switch (event) {
                        case EV0:
                            new S006();
                            new S035();
                            send("msg3");
                            break;
                    }
                    break;
                case EV4:
                    new S081();
                    try {
                        send("msg3");
                    } catch (IllegalStateException e) {
                        send("msg0");
                        new Abstract10();
                    }
                    send("msg3");
                    break;
                default:
                    send("msg3");
                    try {
                        log("trace");
                        send("msg2");
                    } finally {
                        log("trace");
                    }
                    break;
            }
        } finally {
            if (counter > 5) {
                switch (event) {
                    case EV5:
                        log("trace");
                        break;
                    case EV2:
                        send("msg6");
                        send("msg6");
                        break;
                    case EV3:
                        new S064();
                        break;
                }
                new S012();
            } else {
                new S076();
                send("msg7");
                log("trace");
            }
            new Abstract8();
        }
        log("trace");
        new S012();
    }

    public void reset() {
        log("trace");
    }

    public void pause() {
        new S011();
        switch (event) {
            case EV1:
                switch (event) {
                    case EV1:
                        send("msg1");
                        send("msg4");
                        break;
                    case EV4:
                        new S031();
                        new S026();
                        break;
                    case EV0:
                        send("msg3");
                        switch (event) {
                            case EV4:
                                send("msg0");
                                log("trace");
                                break;
                            case EV1:
                                new S091();
                                new S045();
                                break;
                        }
                        break;
                }
                break;
        }
        send("msg4");
    }

    public void resume() {
        new S093();
        new S087();
    }

    public void load() {
        update();
        new S036();
        switch (event) {
            case EV3:
                try {
                    send("msg2");
                } catch (TimeoutException e) {
                    try {
                        send("msg5");
                        new S045();
                        send("msg4");
                    } catch (IOException e) {
                        update();
                    }
                    new S061();
                } catch (IllegalStateException e) {
                    send("msg4");
                }
                send("msg7");
                new S076();
                break;
            case EV1:
                new S054();
                update();
                switch (event) {
                    case EV0:
                        if (counter > 1) {
                            new S013();
                            log("trace");
                            send("msg4");
                        }
                        break;
                    default:
                        update();
                        break;
                }
                break;
        }
    }

    public void save() {
        new S086();
        new S014();
        switch (event) {
            case EV1:
                switch (event) {
                    case EV3:
                        update();
                        send("msg1");
                        new S052();
                        break;
                }
                break;
        }
    }
}

public class S001 extends Abstract19 {
    public void open() {
        switch (event) {
            case EV0:
                try {
                    new Abstract1();
                } catch (IOException e) {
                    try {
                        new S035();
                    } finally {
                        new S057();
                    }
                } finally {
                    switch (event) {
                        case EV4:
                            new S062();
                            break;
                        default:
                            new S009();
                            break;
                    }
                    send("msg0");
                }
                if (counter > 0) {
                    new S073();
                }
                break;
        }
        new Helper();
    }

    public void close() {
        send("msg6");
        send("msg6");
    }

    public void start() {
        new S043();
        switch (event) {
            case EV4:
                try {
                    new S034();
                } catch (IllegalStateException e) {
                    new S039();
                } catch (IOException e) {
                    send("msg7");
                    new S096();
                    new S074();
                } finally {
                    send("msg4");
                    new S068();
                    update();
                }
                try {
                    if (counter > 5) {
                        send("msg1");
                        new S055();
                        new S004();
                    }
                } catch (IllegalStateException e) {
                    if (counter > 5) {
                        send("msg4");
                        new S091();
                        update();
                    } else {
                        new S026();
                    }
                }
                send("msg3");
                break;
        }
        send("msg7");
    }

    public void stop() {
        log("trace");
    }

    public void tick() {
        switch (event) {
            case EV1:
                new S070();
                new S000();
                new S016();
                break;
            case EV0:
                send("msg7");
                log("trace");
                break;
            case EV2:
                try {
                    if (counter > 1) {
                        send("msg3");
                    } else {
                        log("trace");
                    }
                    send("msg0");
                } catch (IllegalStateException e) {
                    if (counter > 4) {
                        update();
                        new S033();
                        log("trace");
                    } else {
                        new S050();
                        new S019();
                        new S006();
                    }
                    new S058();
                } finally {
                    new S063();
                }
                switch (event) {
                    case EV1:
                        update();
                        if (counter > 7) {
                            send("msg1");
                            send("msg3");
                            new S039();
                        } else {
                            send("msg0");
                            update();
                        }
                        break;
                }
                update();
                break;
        }
        switch (event) {
            case EV1:
                new S076();
                send("msg0");
                break;
            case EV3:
                send("msg6");
                break;
        }
    }

    public void reset() {
        if (counter > 6) {
            switch (event) {
                case EV1:
                    send("msg5");
                    break;
                case EV3:
                    send("msg5");
                    if (counter > 6) {
                        new S078();
                        update();
                        log("trace");
                    }
                    break;
            }
        }
    }

    public void pause() {
        new S084();
        switch (event) {
            case EV2:
                switch (event) {
                    case EV3:
                        new S084();
                        break;
                    default:
                        update();
                        send("msg0");
                        switch (event) {
                            case EV1:
                                log("trace");
                                new S013();
                                send("msg3");
                                break;
                            case EV2:
                                update();
                                new Abstract8();
                                send("msg3");
                                break;
                        }
                        break;
                }
                log("trace");
                log("trace");
                break;
            case EV3:
                switch (event) {
                    case EV3:
                        update();
                        if (counter > 9) {
                            send("msg6");
                            send("msg0");
                            log("trace");
                        }
                        try {
                            new S088();
                            send("msg0");
                            new S021();
                        } finally {
                            log("trace");
                        }
                        break;
                    default:
                        update();
                        log("trace");
                        break;
                }
                break;
            default:
                switch (event) {
                    case EV5:
                        new S018();
                        break;
                    case EV4:
                        new S059();
                        send("msg2");
                        try {
                            log("trace");
                            send("msg3");
                            send("msg5");
                        } finally {
                            new Abstract13();
                            new Abstract7();
                        }
                        break;
                    case EV2:
                        try {
                            update();
                            update();
                            send("msg4");
                        } catch (TimeoutException e) {
                            new S040();
                        } finally {
                            new S030();
                            send("msg2");
                            send("msg6");
                        }
                        update();
                        break;
                }
                break;
        }
    }

    public void resume() {
        new Abstract13();
        try {
            if (counter > 2) {
                new S014();
                send("msg5");
            }
            switch (event) {
                case EV1:
                    new S021();
                    switch (event) {
                        case EV1:
                            new S012();
                            log("trace");
                            update();
                            break;
                        default:
                            send("msg3");
                            break;
                    }
                    break;
            }
        } catch (IOException e) {
            send("msg1");
            switch (event) {
                case EV3:
                    send("msg0");
                    new S035();
                    break;
                case EV4:
                    if (counter > 6) {
                        new Abstract4();
                    } else {
                        send("msg4");
                        new S014();
                    }
                    if (counter > 3) {
                        log("trace");
                        new S054();
                    }
                    break;
                case EV5:
                    send("msg4");
                    switch (event) {
                        case EV5:
                            new S094();
                            new S061();
                            break;
                        case EV3:
                            send("msg2");
                            new S024();
                            break;
                        case EV2:
                            new Abstract4();
                            send("msg0");
                            break;
                    }
                    new S007();
                    break;
                default:
                    send("msg3");
                    break;
            }
        } catch (IllegalStateException e) {
            new S068();
        }
        new S093();
    }

    public void load() {
        log("trace");
    }

    public void save() {
        new S041();
        send("msg6");
        send("msg0");
    }
}

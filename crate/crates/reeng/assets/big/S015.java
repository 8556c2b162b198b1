public class S015 extends Abstract8 {
    public void open() {
        update();
    }

    public void close() {
        send("msg7");
        send("msg4");
    }

    public void start() {
        new S084();
        new S072();
    }

    public void stop() {
        new S024();
        send("msg3");
        send("msg6");
    }

    public void tick() {
        log("trace");
        switch (event) {
            case EV4:
                new S021();
                send("msg6");
                log("trace");
                break;
            default:
                send("msg6");
                update();
                break;
        }
    }

    public void reset() {
        if (counter > 7) {
            try {
                send("msg4");
                update();
                new S098();
            } catch (IllegalStateException e) {
                new S091();
                send("msg2");
                send("msg3");
            } finally {
                new S036();
            }
            send("msg4");
            new S003();
        }
        switch (event) {
            case EV1:
                log("trace");
                break;
            case EV4:
                new S039();
                if (counter > 0) {
                    update();
                    if (counter > 7) {
                        send("msg5");
                        new S058();
                        new S025();
                    }
                    send("msg5");
                } else {
                    try {
                        new S006();
                        log("trace");
                    } finally {
                        update();
                        update();
                        send("msg7");
                    }
                    if (counter > 8) {
                        new S007();
                    } else {
                        log("trace");
                        send("msg4");
                        new S014();
                    }
                    new S091();
                }
                log("trace");
                break;
            case EV0:
                switch (event) {
                    case EV0:
                        try {
                            new S090();
                            send("msg0");
                        } catch (IllegalStateException e) {
                            update();
                        }
                        switch (event) {
                            case EV1:
                                send("msg0");
                                send("msg5");
                                update();
                                break;
                            case EV2:
                                update();
                                send("msg5");
                                break;
                            case EV3:
                                send("msg3");
                                break;
                            default:
                                update();
                                new S034();
                                break;
                        }
                        new S023();
                        break;
                    case EV2:
                        new S096();
                        break;
                    case EV3:
                        update();
                        break;
                }
                switch (event) {
                    case EV2:
                        send("msg4");
                        if (counter > 2) {
                            send("msg7");
                        }
                        send("msg2");
                        break;
                }
                send("msg2");
                break;
        }
        switch (event) {
            case EV5:
                try {
                    send("msg3");
                } finally {
                    send("msg2");
                    new S006();
                    log("trace");
                }
                break;
            case EV1:
                new S018();
                switch (event) {
                    case EV1:
                        send("msg5");
                        break;
                    case EV0:
                        new S024();
                        send("msg4");
                        send("msg7");
                        break;
                    case EV5:
                        send("msg4");
                        send("msg6");
                        break;
                }
                switch (event) {
                    case EV4:
                        send("msg0");
                        break;
                    case EV3:
                        log("trace");
                        break;
                }
                break;
            case EV3:
                try {
                    log("trace");
                    switch (event) {
                        case EV0:
                            new S069();
                            send("msg3");
                            new S050();
                            break;
                        case EV2:
                            update();
                            break;
                        case EV4:
                            log("trace");
                            send("msg0");
                            send("msg2");
                            break;
                    }
                } catch (IOException e) {
                    switch (event) {
                        case EV5:
                            log("trace");
                            send("msg6");
                            log("trace");
                            break;
                        case EV3:
                            new Abstract10();
                            break;
                        case EV2:
                            send("msg5");
                            break;
                    }
                    if (counter > 8) {
                        send("msg7");
                    }
                } catch (TimeoutException e) {
                    switch (event) {
                        case EV0:
                            log("trace");
                            new S026();
                            send("msg0");
                            break;
                        case EV2:
                            log("trace");
                            new S064();
                            break;
                        case EV1:
                            new S012();
                            break;
                    }
                    send("msg0");
                    new S041();
                }
                send("msg4");
                switch (event) {
                    case EV5:
                        switch (event) {
                            case EV1:
                                send("msg4");
                                send("msg1");
                                break;
                            default:
                                new S017();
                                send("msg3");
                                break;
                        }
                        break;
                    default:
                        send("msg4");
                        try {
                            new S072();
                        } catch (TimeoutException e) {
                            log("trace");
                            update();
                        } catch (IOException e) {
                            new S016();
                            update();
                            new S023();
                        }
                        new Abstract7();
                        break;
                }
                break;
        }
    }

    public void pause() {
        switch (event) {
            case EV1:
                new S074();
                try {
                    send("msg0");
                    new Abstract13();
                    send("msg6");
                } catch (IOException e) {
                    send("msg2");
                    switch (event) {
                        case EV0:
                            log("trace");
                            break;
                        case EV4:
                            send("msg5");
                            break;
                    }
                    if (counter > 0) {
                        new S008();
                    }
                }
                switch (event) {
                    case EV5:
                        log("trace");
                        send("msg5");
                        if (counter > 2) {
                            send("msg2");
                            new S042();
                        } else {
                            send("msg2");
                            log("trace");
                        }
                        break;
                }
                break;
            case EV0:
                if (counter > 4) {
                    log("trace");
                }
                log("trace");
                break;
            case EV3:
                if (counter > 9) {
                    send("msg4");
                    new S037();
                    send("msg5");
                }
                break;
        }
    }

    public void resume() {
        send("msg1");
        new S067();
    }

    public void load() {
        send("msg5");
        new S027();
        send("msg5");
    }

    public void save() {
        new S045();
    }
}

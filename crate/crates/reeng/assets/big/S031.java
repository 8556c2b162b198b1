public class S031 extends State {
    public void open() {
        send("msg3");
    }

    public void close() {
        send("msg1");
        log("trace");
        if (counter > 4) {
            try {
                send("msg5");
                send("msg6");
                if (counter > 5) {
                    log("trace");
                    send("msg3");
                    log("trace");
                } else {
                    send("msg4");
                    send("msg0");
                    send("msg4");
                }
            } finally {
                switch (event) {
                    case EV4:
                        new S017();
                        new S004();
                        break;
                    case EV0:
                        new S085();
                        break;
                }
                new Abstract8();
            }
        }
    }

    public void start() {
        update();
        send("msg2");
        new S008();
    }

    public void stop() {
        new S002();
        new S085();
        send("msg3");
    }

    public void tick() {
        if (counter > 5) {
            switch (event) {
                case EV3:
                    if (counter > 0) {
                        new S087();
                        new S058();
                        new S001();
                    } else {
                        send("msg6");
                        new S053();
                        new Abstract1();
                    }
                    break;
                case EV5:
                    if (counter > 8) {
                        log("trace");
                        update();
                    }
                    update();
                    break;
            }
            new S087();
        }
    }

    public void reset() {
        if (counter > 3) {
            new Abstract10();
            new S017();
            update();
        }
        switch (event) {
            case EV0:
                if (counter > 2) {
                    if (counter > 0) {
                        update();
                    } else {
                        send("msg6");
                    }
                    update();
                    send("msg1");
                }
                if (counter > 1) {
                    switch (event) {
                        case EV4:
                            new S017();
                            log("trace");
                            send("msg0");
                            break;
                        case EV3:
                            log("trace");
                            new S073();
                            break;
                    }
                    send("msg6");
                    new S073();
                }
                new S078();
                break;
            case EV5:
                if (counter > 2) {
                    new S068();
                    new S077();
                    log("trace");
                }
                break;
            case EV1:
                new S084();
                send("msg0");
                break;
        }
        send("msg2");
    }

    public void pause() {
        try {
            send("msg3");
            send("msg5");
        } catch (TimeoutException e) {
            send("msg3");
        } finally {
            send("msg3");
            switch (event) {
                case EV2:
                    switch (event) {
                        case EV4:
                            new S018();
                            break;
                        case EV5:
                            send("msg3");
                            send("msg1");
                            update();
                            break;
                        case EV1:
                            new S014();
                            send("msg6");
                            send("msg5");
                            break;
                        default:
                            send("msg3");
                            break;
                    }
                    new S079();
                    try {
                        new S059();
                        send("msg5");
                    } catch (IllegalStateException e) {
                        log("trace");
                        new S035();
                        send("msg2");
                    } finally {
                        send("msg3");
                    }
                    break;
                case EV4:
                    send("msg2");
                    new S043();
                    break;
                case EV3:
                    send("msg3");
                    send("msg2");
                    break;
            }
        }
        send("msg2");
        send("msg0");
    }

    public void resume() {
        try {
            try {
                log("trace");
                new S000();
            } catch (IOException e) {
                send("msg7");
            }
            if (counter > 1) {
                new S034();
                send("msg3");
                send("msg6");
            } else {
                update();
                send("msg3");
            }
        } finally {
            new S074();
        }
    }

    public void load() {
        switch (event) {
            case EV5:
                log("trace");
                switch (event) {
                    case EV3:
                        try {
                            send("msg1");
                            send("msg1");
                        } catch (IllegalStateException e) {
                            new S084();
                        } finally {
                            log("trace");
                        }
                        try {
                            log("trace");
                            new S033();
                            log("trace");
                        } finally {
                            new S058();
                        }
                        break;
                }
                send("msg0");
                break;
            case EV3:
                try {
                    send("msg4");
                    send("msg3");
                } catch (TimeoutException e) {
                    switch (event) {
                        case EV3:
                            new S035();
                            break;
                        case EV0:
                            send("msg7");
                            new Abstract15();
                            new S083();
                            break;
                        case EV1:
                            send("msg2");
                            break;
                    }
                } catch (IllegalStateException e) {
                    new S085();
                    new S036();
                    send("msg3");
                }
                send("msg0");
                switch (event) {
                    case EV2:
                        try {
                            log("trace");
                            send("msg6");
                        } finally {
                            send("msg3");
                            send("msg6");
                            send("msg0");
                        }
                        break;
                }
                break;
        }
        if (counter > 9) {
            new S062();
        } else {
            send("msg2");
            switch (event) {
                case EV3:
                    try {
                        send("msg3");
                        send("msg0");
                    } catch (TimeoutException e) {
                        new S053();
                        new S033();
                    }
                    send("msg5");
                    break;
                case EV0:
                    send("msg6");
                    break;
                case EV1:
                    send("msg2");
                    send("msg5");
                    break;
            }
            try {
                switch (event) {
                    case EV1:
                        send("msg2");
                        new S022();
                        break;
                    case EV2:
                        log("trace");
                        send("msg7");
                        break;
                }
                update();
                log("trace");
            } catch (IOException e) {
                new S003();
                new S081();
            } catch (IllegalStateException e) {
                if (counter > 5) {
                    send("msg2");
                    send("msg3");
                }
                new S099();
            }
        }
        switch (event) {
            case EV2:
                log("trace");
                break;
            case EV5:
                if (counter > 6) {
                    send("msg1");
                } else {
                    try {
                        new S040();
                        new S063();
                    } finally {
                        log("trace");
                        new S091();
                        send("msg2");
                    }
                    send("msg5");
                }
                log("trace");
                break;
            default:
                send("msg6");
                update();
                log("trace");
                break;
        }
    }

    public void save() {
        switch (event) {
            case EV1:
                new Abstract2();
                break;
            case EV2:
                send("msg7");
                switch (event) {
                    case EV5:
                        new Abstract6();
                        new S009();
                        break;
                    default:
                        new S041();
                        switch (event) {
                            case EV5:
                                log("trace");
                                send("msg0");
                                update();
                                break;
                        }
                        break;
                }
                break;
        }
        new S026();
    }
}

public class S080 extends State {
    public void open() {
        try {
            update();
            send("msg0");
        } catch (IOException e) {
            switch (event) {
                case EV1:
                    new S034();
                    break;
            }
            try {
                if (counter > 1) {
                    update();
                }
            } catch (IOException e) {
                new S054();
                try {
                    send("msg6");
                    update();
                    send("msg2");
                } finally {
                    update();
                }
                send("msg7");
            }
        } catch (IllegalStateException e) {
            try {
                send("msg7");
                send("msg3");
                update();
            } catch (TimeoutException e) {
                send("msg4");
            }
            update();
            new S086();
        }
        send("msg2");
    }

    public void close() {
        log("trace");
        update();
    }

    public void start() {
        update();
        if (counter > 2) {
            if (counter > 0) {
                send("msg2");
            }
            send("msg2");
        } else {
            send("msg7");
            send("msg6");
            try {
                send("msg5");
                new S075();
                send("msg4");
            } catch (IllegalStateException e) {
                new S090();
                send("msg0");
                send("msg4");
            }
        }
        new S046();
    }

    public void stop() {
        new S050();
        switch (event) {
            case EV4:
                log("trace");
                break;
            case EV0:
                switch (event) {
                    case EV4:
                        try {
                            new S003();
                            send("msg6");
                            send("msg0");
                        } catch (IOException e) {
                            send("msg1");
                            update();
                        }
                        switch (event) {
                            case EV2:
                                new S083();
                                new S043();
                                break;
                            case EV4:
                                new S033();
                                update();
                                break;
                            case EV5:
                                log("trace");
                                break;
                            default:
                                send("msg6");
                                send("msg0");
                                new S092();
                                break;
                        }
                        break;
                    case EV3:
                        switch (event) {
                            case EV4:
                                new S039();
                                break;
                        }
                        send("msg0");
                        break;
                }
                break;
            case EV5:
                send("msg4");
                send("msg5");
                new S054();
                break;
        }
    }

    public void tick() {
        switch (event) {
            case EV1:
                update();
                break;
        }
        send("msg3");
        if (counter > 7) {
            switch (event) {
                case EV4:
                    update();
                    log("trace");
                    break;
                default:
                    send("msg3");
                    send("msg7");
                    try {
                        new S081();
                    } finally {
                        send("msg0");
                    }
                    break;
            }
            switch (event) {
                case EV3:
                    send("msg1");
                    send("msg7");
                    break;
                case EV1:
                    switch (event) {
                        case EV4:
                            send("msg2");
                            update();
                            log("trace");
                            break;
                        case EV1:
                            new S055();
                            new S050();
                            log("trace");
                            break;
                        case EV5:
                            new S072();
                            send("msg4");
                            break;
                    }
                    send("msg3");
                    send("msg6");
                    break;
            }
            log("trace");
        } else {
            update();
            if (counter > 0) {
                if (counter > 8) {
                    new S018();
                    send("msg3");
                    new S002();
                } else {
                    new S090();
                }
                new S062();
            }
        }
    }

    public void reset() {
        new S051();
        log("trace");
        if (counter > 7) {
            switch (event) {
                case EV2:
                    if (counter > 8) {
                        new S000();
                        log("trace");
                    }
                    new S024();
                    break;
            }
        } else {
            send("msg7");
            log("trace");
            log("trace");
        }
    }

    public void pause() {
        switch (event) {
            case EV4:
                send("msg6");
                send("msg1");
                update();
                break;
            case EV3:
                update();
                break;
        }
        switch (event) {
            case EV2:
                if (counter > 3) {
                    try {
                        send("msg1");
                        send("msg2");
                        new S034();
                    } finally {
                        update();
                    }
                }
                send("msg0");
                log("trace");
                break;
            case EV5:
                new S001();
                send("msg7");
                new S036();
                break;
            case EV0:
                new S026();
                break;
        }
        if (counter > 2) {
            new S018();
            if (counter > 2) {
                send("msg5");
                new S096();
            } else {
                if (counter > 9) {
                    log("trace");
                } else {
                    send("msg6");
                    send("msg6");
                }
                try {
                    send("msg6");
                    send("msg4");
                } catch (IllegalStateException e) {
                    send("msg0");
                    log("trace");
                    send("msg1");
                }
                new S009();
            }
        } else {
            new S007();
        }
    }

    public void resume() {
        new S075();
        update();
        update();
    }

    public void load() {
        if (counter > 2) {
            send("msg3");
            send("msg3");
            update();
        } else {
            switch (event) {
                case EV1:
                    if (counter > 0) {
                        send("msg7");
                        send("msg7");
                    }
                    if (counter > 2) {
                        new S042();
                        new S092();
                        new Abstract21();
                    } else {
                        new S099();
                        send("msg6");
                    }
                    break;
                case EV5:
                    switch (event) {
                        case EV3:
                            send("msg2");
                            new S033();
                            new S054();
                            break;
                    }
                    new S009();
                    log("trace");
                    break;
                case EV2:
                    if (counter > 8) {
                        send("msg0");
                        send("msg3");
                        send("msg1");
                    } else {
                        new S008();
                        new S040();
                        update();
                    }
                    try {
                        send("msg0");
                        new S098();
                        send("msg1");
                    } catch (IOException e) {
                        send("msg3");
                        log("trace");
                        new S053();
                    } catch (TimeoutException e) {
                        update();
                        send("msg4");
                    } finally {
                        send("msg1");
                    }
                    switch (event) {
                        case EV3:
                            new S000();
                            break;
                        case EV1:
                            new S032();
                            break;
                        case EV2:
                            send("msg3");
                            update();
                            new S017();
                            break;
                        default:
                            new S052();
                            break;
                    }
                    break;
            }
            new S036();
            new S066();
        }
        new S056();
    }

    public void save() {
        update();
        send("msg4");
        new Helper();
    }
}

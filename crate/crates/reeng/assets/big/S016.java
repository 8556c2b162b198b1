public class S016 extends State {
    public void open() {
        switch (event) {
            case EV4:
                switch (event) {
                    case EV1:
                        switch (event) {
                            case EV5:
                                send("msg1");
                                send("msg4");
                                break;
                            case EV2:
                                send("msg4");
                                send("msg0");
                                send("msg5");
                                break;
                        }
                        send("msg3");
                        log("trace");
                        break;
                    case EV4:
                        new Abstract23();
                        new S009();
                        switch (event) {
                            case EV0:
                                send("msg2");
                                break;
                            case EV2:
                                send("msg0");
                                break;
                            case EV1:
                                new S003();
                                send("msg6");
                                send("msg7");
                                break;
                        }
                        break;
                    case EV3:
                        if (counter > 2) {
                            new S094();
                            new S048();
                            send("msg5");
                        }
                        send("msg5");
                        switch (event) {
                            case EV2:
                                send("msg4");
                                new S072();
                                log("trace");
                                break;
                            case EV0:
                                send("msg6");
                                new S000();
                                send("msg3");
                                break;
                            case EV5:
                                new S041();
                                send("msg2");
                                send("msg6");
                                break;
                            default:
                                new S015();
                                send("msg0");
                                update();
                                break;
                        }
                        break;
                    default:
                        send("msg3");
                        break;
                }
                break;
            case EV5:
                update();
                new S069();
                break;
            case EV1:
                new S037();
                break;
        }
    }

    public void close() {
        switch (event) {
            case EV5:
                new S035();
                send("msg1");
                new S052();
                break;
        }
        new S027();
    }

    public void start() {
        log("trace");
    }

    public void stop() {
        if (counter > 6) {
            send("msg6");
            send("msg1");
        }
        log("trace");
        switch (event) {
            case EV2:
                new S048();
                new S012();
                break;
            case EV0:
                try {
                    send("msg3");
                    new S097();
                } catch (IOException e) {
                    try {
                        send("msg1");
                        send("msg4");
                        new S035();
                    } catch (IOException e) {
                        log("trace");
                        new S039();
                    } catch (TimeoutException e) {
                        send("msg4");
                    }
                    new S090();
                } catch (IllegalStateException e) {
                    if (counter > 8) {
                        log("trace");
                    } else {
                        send("msg7");
                        new S023();
                        new S042();
                    }
                } finally {
                    update();
                }
                break;
        }
    }

    public void tick() {
        if (counter > 8) {
            log("trace");
        }
        try {
            send("msg5");
            send("msg4");
        } catch (IllegalStateException e) {
            send("msg0");
            send("msg7");
        } catch (TimeoutException e) {
            new Abstract19();
            send("msg5");
        } finally {
            send("msg2");
            switch (event) {
                case EV3:
                    if (counter > 8) {
                        new S039();
                        send("msg4");
                    } else {
                        new S064();
                    }
                    new S076();
                    new S011();
                    break;
                case EV5:
                    switch (event) {
                        case EV1:
                            send("msg1");
                            send("msg7");
                            break;
                    }
                    update();
                    try {
                        log("trace");
                    } catch (IllegalStateException e) {
                        send("msg4");
                        new S095();
                    } finally {
                        update();
                    }
                    break;
            }
        }
        switch (event) {
            case EV3:
                if (counter > 8) {
                    try {
                        send("msg3");
                        new S088();
                        send("msg6");
                    } finally {
                        update();
                        new S086();
                    }
                    try {
                        send("msg6");
                        new S053();
                    } catch (IOException e) {
                        new S003();
                    } finally {
                        send("msg0");
                        send("msg1");
                    }
                    new S096();
                } else {
                    new S008();
                    if (counter > 0) {
                        send("msg7");
                    } else {
                        send("msg3");
                        send("msg7");
                        send("msg2");
                    }
                    try {
                        log("trace");
                    } finally {
                        new S044();
                    }
                }
                break;
            default:
                send("msg0");
                break;
        }
    }

    public void reset() {
        update();
        try {
            new Abstract13();
            new S032();
            send("msg3");
        } catch (IOException e) {
            new S011();
            log("trace");
        }
    }

    public void pause() {
        new S079();
    }

    public void resume() {
        if (counter > 8) {
            try {
                if (counter > 4) {
                    new S037();
                    send("msg7");
                    send("msg7");
                } else {
                    send("msg1");
                    new S065();
                    send("msg4");
                }
            } catch (TimeoutException e) {
                new S098();
            } catch (IOException e) {
                log("trace");
            }
            if (counter > 2) {
                new S059();
                if (counter > 6) {
                    update();
                    send("msg4");
                } else {
                    log("trace");
                }
                send("msg1");
            }
            send("msg6");
        } else {
            update();
        }
    }

    public void load() {
        try {
            if (counter > 7) {
                if (counter > 7) {
                    log("trace");
                    send("msg4");
                    send("msg5");
                }
            } else {
                new S077();
                if (counter > 1) {
                    send("msg1");
                    log("trace");
                    new S034();
                }
            }
        } finally {
            log("trace");
            if (counter > 7) {
                if (counter > 6) {
                    send("msg3");
                    send("msg7");
                    new S083();
                } else {
                    send("msg5");
                    log("trace");
                }
                send("msg1");
            }
            new S052();
        }
        send("msg5");
        new S040();
    }

    public void save() {
        if (counter > 6) {
            switch (event) {
                case EV3:
                    switch (event) {
                        case EV5:
                            update();
                            break;
                        case EV4:
                            new Abstract19();
                            break;
                        case EV0:
                            new S046();
                            break;
                    }
                    break;
                case EV2:
                    new S004();
                    new S097();
                    switch (event) {
                        case EV4:
                            send("msg1");
                            new S035();
                            new S091();
                            break;
                        case EV0:
                            new S069();
                            break;
                        case EV1:
                            send("msg4");
                            break;
                    }
                    break;
            }
            new S028();
            new S093();
        }
        try {
            new S034();
            send("msg2");
            send("msg1");
        } finally {
            switch (event) {
                case EV4:
                    send("msg4");
                    break;
                case EV1:
                    send("msg2");
                    switch (event) {
                        case EV2:
                            new S086();
                            new S028();
                            update();
                            break;
                        case EV3:
                            update();
                            new S033();
                            break;
                    }
                    new S062();
                    break;
            }
        }
    }
}

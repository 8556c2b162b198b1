public class S025 extends State {
    public void open() {
        try {
            try {
                new S011();
                new Abstract22();
                new S093();
            } finally {
                switch (event) {
                    case EV4:
                        send("msg3");
                        break;
                    case EV2:
                        send("msg3");
                        break;
                    case EV3:
                        send("msg0");
                        break;
                }
                new S031();
                if (counter > 1) {
                    new S053();
                } else {
                    send("msg6");
                }
            }
            try {
                new S060();
                send("msg0");
                switch (event) {
                    case EV3:
                        new S011();
                        send("msg6");
                        new S068();
                        break;
                    case EV2:
                        new S064();
                        send("msg2");
                        log("trace");
                        break;
                }
            } catch (IOException e) {
                send("msg3");
                send("msg0");
            } catch (TimeoutException e) {
                if (counter > 9) {
                    send("msg4");
                    update();
                } else {
                    new S071();
                    new S073();
                }
            }
        } catch (TimeoutException e) {
            new S045();
            send("msg3");
            send("msg5");
        } catch (IOException e) {
            try {
                new Abstract13();
                update();
                if (counter > 6) {
                    log("trace");
                    new S034();
                }
            } catch (IllegalStateException e) {
                send("msg1");
            }
            send("msg2");
        }
        if (counter > 2) {
            switch (event) {
                case EV3:
                    try {
                        log("trace");
                        log("trace");
                        send("msg0");
                    } catch (TimeoutException e) {
                        new S097();
                        new S027();
                    }
                    try {
                        send("msg0");
                        send("msg6");
                        new S004();
                    } catch (IOException e) {
                        new S070();
                        send("msg5");
                    } catch (IllegalStateException e) {
                        new S024();
                    }
                    send("msg4");
                    break;
                case EV0:
                    log("trace");
                    break;
            }
            send("msg4");
            log("trace");
        }
        log("trace");
    }

    public void close() {
        send("msg3");
        new S051();
        send("msg6");
    }

    public void start() {
        new S022();
    }

    public void stop() {
        send("msg2");
        switch (event) {
            case EV0:
                send("msg4");
                new Abstract18();
                break;
            case EV2:
                switch (event) {
                    case EV1:
                        try {
                            log("trace");
                        } catch (TimeoutException e) {
                            send("msg6");
                            update();
                            new Abstract3();
                        }
                        send("msg1");
                        break;
                    case EV2:
                        if (counter > 3) {
                            new S078();
                            send("msg7");
                            new S011();
                        }
                        break;
                    case EV4:
                        new S097();
                        break;
                }
                try {
                    send("msg2");
                } catch (IOException e) {
                    log("trace");
                } catch (TimeoutException e) {
                    if (counter > 9) {
                        new S042();
                    } else {
                        send("msg1");
                        update();
                        log("trace");
                    }
                    new S092();
                } finally {
                    new S001();
                }
                switch (event) {
                    case EV2:
                        new S075();
                        new S062();
                        new Abstract19();
                        break;
                    case EV4:
                        switch (event) {
                            case EV4:
                                send("msg7");
                                send("msg7");
                                break;
                            case EV0:
                                new S030();
                                send("msg6");
                                new S003();
                                break;
                        }
                        send("msg1");
                        break;
                }
                break;
            case EV5:
                new S063();
                new S007();
                try {
                    switch (event) {
                        case EV0:
                            send("msg1");
                            break;
                    }
                    send("msg1");
                    switch (event) {
                        case EV4:
                            send("msg4");
                            send("msg5");
                            break;
                        default:
                            new S012();
                            new S056();
                            break;
                    }
                } catch (IOException e) {
                    if (counter > 1) {
                        update();
                    }
                } catch (IllegalStateException e) {
                    send("msg3");
                }
                break;
            default:
                send("msg6");
                send("msg6");
                send("msg4");
                break;
        }
    }

    public void tick() {
        if (counter > 3) {
            new S076();
            try {
                send("msg2");
                send("msg2");
            } catch (IllegalStateException e) {
                send("msg4");
                if (counter > 2) {
                    update();
                }
                try {
                    log("trace");
                    send("msg7");
                } catch (IllegalStateException e) {
                    send("msg3");
                    send("msg6");
                    send("msg0");
                } catch (IOException e) {
                    new S054();
                    new S016();
                }
            } finally {
                if (counter > 5) {
                    log("trace");
                    new S098();
                    send("msg7");
                } else {
                    new S072();
                    new S091();
                }
                send("msg2");
            }
            new S015();
        } else {
            new S040();
            try {
                send("msg5");
                new Abstract13();
            } catch (IOException e) {
                send("msg0");
                send("msg0");
                switch (event) {
                    case EV1:
                        new S093();
                        break;
                    default:
                        log("trace");
                        break;
                }
            } catch (TimeoutException e) {
                new S091();
                new S031();
                try {
                    new Abstract1();
                    new S008();
                    send("msg4");
                } catch (TimeoutException e) {
                    send("msg3");
                }
            }
        }
        new S073();
    }

    public void reset() {
        new Abstract17();
        new S073();
    }

    public void pause() {
        new Abstract21();
        send("msg4");
        new Abstract18();
    }

    public void resume() {
        try {
            try {
                if (counter > 1) {
                    new S090();
                }
                if (counter > 4) {
                    log("trace");
                    update();
                }
            } catch (IllegalStateException e) {
                if (counter > 7) {
                    send("msg6");
                } else {
                    log("trace");
                    new S052();
                    update();
                }
                try {
                    log("trace");
                } catch (TimeoutException e) {
                    update();
                    new S099();
                    log("trace");
                } catch (IllegalStateException e) {
                    new Abstract15();
                    update();
                    new S084();
                }
            } catch (TimeoutException e) {
                new Abstract13();
                new S033();
            }
            new S008();
        } finally {
            new S024();
        }
    }

    public void load() {
        send("msg7");
        new Abstract15();
    }

    public void save() {
        switch (event) {
            case EV5:
                switch (event) {
                    case EV2:
                        switch (event) {
                            case EV5:
                                send("msg6");
                                send("msg2");
                                new S012();
                                break;
                            case EV4:
                                log("trace");
                                new S064();
                                break;
                            case EV2:
                                send("msg6");
                                send("msg4");
                                new S034();
                                break;
                        }
                        if (counter > 1) {
                            update();
                            new S059();
                            new S022();
                        }
                        send("msg2");
                        break;
                    case EV0:
                        new S048();
                        send("msg1");
                        break;
                    case EV4:
                        send("msg7");
                        send("msg1");
                        break;
                }
                break;
            case EV0:
                new S019();
                break;
        }
        new S057();
    }
}

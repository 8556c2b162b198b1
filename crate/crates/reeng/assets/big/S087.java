public class S087 extends Abstract5 {
    public void open() {
        try {
            new S049();
        } finally {
            new S021();
            send("msg1");
            send("msg4");
        }
        new S065();
        if (counter > 9) {
            update();
        } else {
            if (counter > 4) {
                try {
                    new Abstract5();
                    log("trace");
                    new S094();
                } catch (IOException e) {
                    update();
                    send("msg0");
                    send("msg0");
                } catch (TimeoutException e) {
                    new S091();
                    send("msg7");
                    send("msg4");
                } finally {
                    send("msg5");
                }
                try {
                    send("msg4");
                } catch (IOException e) {
                    send("msg4");
                    update();
                } catch (IllegalStateException e) {
                    new S016();
                    new S096();
                    new Abstract21();
                }
                update();
            } else {
                new S031();
            }
            try {
                try {
                    send("msg3");
                } catch (IOException e) {
                    new S086();
                    send("msg0");
                    send("msg5");
                } catch (IllegalStateException e) {
                    send("msg5");
                }
                if (counter > 8) {
                    new S090();
                    new S068();
                    new S022();
                }
            } catch (IllegalStateException e) {
                send("msg5");
            } catch (TimeoutException e) {
                send("msg5");
                new S044();
            }
        }
    }

    public void close() {
        log("trace");
    }

    public void start() {
        update();
    }

    public void stop() {
        new S011();
        new S076();
    }

    public void tick() {
        log("trace");
    }

    public void reset() {
        new S079();
        try {
            new S005();
        } catch (IllegalStateException e) {
            new S046();
        } catch (IOException e) {
            send("msg4");
            send("msg3");
            if (counter > 5) {
                if (counter > 5) {
                    send("msg0");
                }
                switch (event) {
                    case EV5:
                        send("msg3");
                        new S003();
                        send("msg0");
                        break;
                    case EV0:
                        send("msg0");
                        break;
                    case EV3:
                        log("trace");
                        send("msg5");
                        break;
                }
            }
        }
        new Abstract1();
    }

    public void pause() {
        new S018();
    }

    public void resume() {
        switch (event) {
            case EV0:
                switch (event) {
                    case EV2:
                        send("msg7");
                        if (counter > 3) {
                            send("msg6");
                            update();
                            new S013();
                        } else {
                            update();
                            update();
                            new S083();
                        }
                        new S088();
                        break;
                    case EV5:
                        if (counter > 0) {
                            new S073();
                            log("trace");
                            log("trace");
                        } else {
                            send("msg6");
                            new S062();
                            send("msg3");
                        }
                        if (counter > 7) {
                            log("trace");
                            send("msg7");
                        } else {
                            send("msg1");
                        }
                        send("msg3");
                        break;
                    case EV1:
                        if (counter > 6) {
                            new S044();
                            new S079();
                            update();
                        } else {
                            send("msg6");
                        }
                        send("msg2");
                        break;
                }
                try {
                    log("trace");
                    new S078();
                    switch (event) {
                        case EV0:
                            send("msg6");
                            update();
                            send("msg7");
                            break;
                        case EV1:
                            send("msg4");
                            update();
                            break;
                        case EV5:
                            new S011();
                            break;
                    }
                } catch (IllegalStateException e) {
                    send("msg6");
                    new S031();
                    new S075();
                } finally {
                    send("msg0");
                }
                new S077();
                break;
            case EV1:
                switch (event) {
                    case EV2:
                        if (counter > 5) {
                            new S095();
                            log("trace");
                        } else {
                            send("msg7");
                            send("msg4");
                        }
                        break;
                    default:
                        new S088();
                        switch (event) {
                            case EV5:
                                send("msg4");
                                send("msg5");
                                send("msg6");
                                break;
                            case EV3:
                                new S090();
                                new S027();
                                break;
                            default:
                                send("msg1");
                                new S089();
                                log("trace");
                                break;
                        }
                        break;
                }
                new Abstract20();
                new S009();
                break;
        }
        try {
            log("trace");
            if (counter > 5) {
                if (counter > 2) {
                    send("msg4");
                    new S072();
                    new S062();
                }
                send("msg7");
            }
            send("msg1");
        } catch (IllegalStateException e) {
            send("msg4");
            send("msg5");
            update();
        } catch (TimeoutException e) {
            if (counter > 1) {
                try {
                    new S025();
                    new S037();
                    new S062();
                } catch (TimeoutException e) {
                    new S079();
                    send("msg3");
                }
                log("trace");
                new S043();
            }
        } finally {
            new S061();
        }
    }

    public void load() {
        update();
    }

    public void save() {
        switch (event) {
            case EV1:
                if (counter > 9) {
                    new S020();
                    if (counter > 5) {
                        new S045();
                        update();
                        send("msg4");
                    } else {
                        update();
                        send("msg2");
                    }
                    new S065();
                }
                send("msg5");
                break;
        }
    }
}

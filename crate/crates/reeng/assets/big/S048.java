public class S048 extends Abstract12 {
    public void open() {
        send("msg1");
    }

    public void close() {
        switch (event) {
            case EV0:
                if (counter > 6) {
                    send("msg7");
                    send("msg0");
                    try {
                        send("msg2");
                        send("msg6");
                        new Abstract11();
                    } catch (IllegalStateException e) {
                        new Abstract2();
                        new S084();
                        log("trace");
                    } catch (IOException e) {
                        send("msg4");
                        new Abstract6();
                        log("trace");
                    } finally {
                        send("msg7");
                        send("msg5");
                        new S089();
                    }
                } else {
                    try {
                        new S011();
                    } catch (IllegalStateException e) {
                        update();
                    } catch (IOException e) {
                        new S019();
                    }
                }
                break;
            case EV3:
                send("msg1");
                log("trace");
                break;
            case EV2:
                if (counter > 1) {
                    if (counter > 4) {
                        send("msg7");
                        new S065();
                        new S099();
                    }
                    send("msg7");
                    try {
                        send("msg1");
                        send("msg7");
                    } finally {
                        new S037();
                    }
                } else {
                    send("msg6");
                    send("msg1");
                }
                send("msg4");
                send("msg7");
                break;
            default:
                send("msg6");
                send("msg6");
                log("trace");
                break;
        }
        try {
            send("msg5");
            try {
                update();
                new S010();
            } finally {
                new S010();
                try {
                    log("trace");
                } catch (IllegalStateException e) {
                    new S057();
                    new S050();
                } catch (IOException e) {
                    log("trace");
                    send("msg0");
                    send("msg7");
                }
                send("msg0");
            }
            new S029();
        } catch (IOException e) {
            send("msg3");
            new S075();
            new S030();
        } finally {
            send("msg2");
        }
    }

    public void start() {
        if (counter > 9) {
            if (counter > 7) {
                new S058();
            } else {
                try {
                    update();
                    send("msg7");
                } finally {
                    new S032();
                    new S063();
                    send("msg1");
                }
            }
            if (counter > 6) {
                update();
                if (counter > 4) {
                    send("msg6");
                    send("msg2");
                    send("msg5");
                }
                new S073();
            }
        }
        update();
        send("msg7");
    }

    public void stop() {
        try {
            update();
            send("msg6");
            send("msg1");
        } catch (IllegalStateException e) {
            try {
                try {
                    new S095();
                    send("msg1");
                    new S061();
                } finally {
                    update();
                }
            } finally {
                send("msg1");
                send("msg6");
            }
        }
        send("msg1");
        new S071();
    }

    public void tick() {
        switch (event) {
            case EV3:
                send("msg0");
                send("msg3");
                new S002();
                break;
            case EV2:
                new S045();
                if (counter > 9) {
                    try {
                        update();
                        new S094();
                    } catch (IllegalStateException e) {
                        send("msg2");
                        update();
                    } catch (IOException e) {
                        update();
                        send("msg3");
                        send("msg5");
                    }
                    send("msg7");
                }
                new S075();
                break;
        }
        send("msg3");
    }

    public void reset() {
        new S012();
        switch (event) {
            case EV2:
                new S098();
                new S081();
                break;
            case EV3:
                send("msg1");
                send("msg1");
                update();
                break;
            case EV0:
                new S036();
                switch (event) {
                    case EV1:
                        switch (event) {
                            case EV4:
                                new S008();
                                break;
                            case EV3:
                                update();
                                break;
                        }
                        send("msg7");
                        break;
                    case EV4:
                        switch (event) {
                            case EV2:
                                update();
                                send("msg7");
                                new S006();
                                break;
                        }
                        send("msg6");
                        send("msg7");
                        break;
                    case EV2:
                        send("msg3");
                        if (counter > 6) {
                            new S029();
                            new S090();
                            new S070();
                        } else {
                            new Helper();
                            send("msg2");
                            update();
                        }
                        new S079();
                        break;
                    default:
                        send("msg0");
                        send("msg0");
                        try {
                            new S046();
                        } catch (IOException e) {
                            send("msg2");
                            new S064();
                            send("msg0");
                        } catch (IllegalStateException e) {
                            send("msg7");
                            send("msg2");
                            log("trace");
                        }
                        break;
                }
                send("msg2");
                break;
        }
    }

    public void pause() {
        new S001();
        new S025();
        log("trace");
    }

    public void resume() {
        send("msg4");
        log("trace");
        send("msg7");
    }

    public void load() {
        send("msg3");
        send("msg6");
        update();
    }

    public void save() {
        switch (event) {
            case EV5:
                send("msg5");
                send("msg2");
                if (counter > 1) {
                    send("msg6");
                }
                break;
        }
    }
}

public class S091 extends State {
    public void open() {
        try {
            send("msg5");
            new S067();
        } finally {
            log("trace");
            try {
                log("trace");
                if (counter > 4) {
                    send("msg4");
                    send("msg4");
                    send("msg5");
                }
                send("msg4");
            } finally {
                update();
                switch (event) {
                    case EV3:
                        send("msg5");
                        new S008();
                        send("msg2");
                        break;
                }
                send("msg0");
            }
        }
        new S060();
    }

    public void close() {
        log("trace");
        new Abstract11();
        try {
            try {
                if (counter > 4) {
                    log("trace");
                }
            } catch (IOException e) {
                send("msg2");
                send("msg6");
            } catch (IllegalStateException e) {
                switch (event) {
                    case EV4:
                        new S026();
                        break;
                }
                if (counter > 8) {
                    new S090();
                }
                new S068();
            } finally {
                try {
                    update();
                } catch (IllegalStateException e) {
                    new S097();
                    send("msg5");
                    send("msg2");
                } catch (TimeoutException e) {
                    log("trace");
                    send("msg1");
                    log("trace");
                }
            }
            new S073();
        } finally {
            new Abstract8();
            send("msg2");
            update();
        }
    }

    public void start() {
        send("msg3");
    }

    public void stop() {
        switch (event) {
            case EV1:
                new S040();
                break;
        }
    }

    public void tick() {
        switch (event) {
            case EV0:
                try {
                    update();
                    send("msg2");
                } catch (IllegalStateException e) {
                    new S003();
                    try {
                        update();
                        update();
                        send("msg6");
                    } finally {
                        log("trace");
                        new S078();
                    }
                } catch (TimeoutException e) {
                    log("trace");
                }
                send("msg3");
                send("msg5");
                break;
            case EV4:
                update();
                send("msg4");
                new S072();
                break;
            case EV5:
                switch (event) {
                    case EV4:
                        switch (event) {
                            case EV3:
                                send("msg6");
                                send("msg5");
                                send("msg1");
                                break;
                            case EV4:
                                send("msg5");
                                new S037();
                                break;
                        }
                        new S087();
                        new Abstract8();
                        break;
                    case EV1:
                        new Abstract22();
                        update();
                        break;
                }
                if (counter > 2) {
                    send("msg3");
                    send("msg0");
                }
                send("msg1");
                break;
        }
        log("trace");
    }

    public void reset() {
        new S028();
    }

    public void pause() {
        new S020();
        send("msg6");
        new S013();
    }

    public void resume() {
        if (counter > 7) {
            switch (event) {
                case EV1:
                    new S025();
                    break;
            }
            new S079();
        } else {
            send("msg5");
            update();
            try {
                send("msg5");
                switch (event) {
                    case EV4:
                        send("msg4");
                        break;
                }
            } catch (IOException e) {
                send("msg6");
            } catch (IllegalStateException e) {
                send("msg2");
                switch (event) {
                    case EV2:
                        send("msg5");
                        send("msg5");
                        break;
                }
            } finally {
                log("trace");
                try {
                    send("msg2");
                    new S070();
                    new S067();
                } catch (IllegalStateException e) {
                    send("msg6");
                }
                switch (event) {
                    case EV2:
                        new Abstract5();
                        send("msg5");
                        new S032();
                        break;
                    case EV0:
                        new S014();
                        update();
                        break;
                    case EV3:
                        log("trace");
                        break;
                }
            }
        }
    }

    public void load() {
        send("msg5");
    }

    public void save() {
        new S059();
        switch (event) {
            case EV1:
                new S033();
                send("msg0");
                break;
            case EV0:
                update();
                break;
            case EV4:
                new S006();
                try {
                    try {
                        new S044();
                        new S056();
                    } catch (IllegalStateException e) {
                        update();
                    } catch (IOException e) {
                        send("msg1");
                        send("msg4");
                        new S005();
                    }
                } catch (IllegalStateException e) {
                    send("msg4");
                    send("msg7");
                } catch (IOException e) {
                    send("msg2");
                } finally {
                    send("msg1");
                    log("trace");
                }
                break;
        }
        update();
    }
}

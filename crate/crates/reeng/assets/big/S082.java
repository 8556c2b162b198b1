public class S082 extends State {
    public void open() {
        send("msg3");
        log("trace");
    }

    public void close() {
        send("msg7");
        new S005();
    }

    public void start() {
        if (counter > 0) {
            switch (event) {
                case EV5:
                    switch (event) {
                        case EV0:
                            send("msg3");
                            send("msg2");
                            new S096();
                            break;
                        case EV1:
                            send("msg0");
                            new S004();
                            new Abstract13();
                            break;
                    }
                    log("trace");
                    try {
                        send("msg0");
                    } catch (IOException e) {
                        new S045();
                        new Abstract10();
                    } catch (IllegalStateException e) {
                        new S074();
                        new S060();
                        new S092();
                    }
                    break;
                case EV1:
                    send("msg4");
                    new Abstract7();
                    try {
                        new S079();
                    } catch (IOException e) {
                        send("msg6");
                        send("msg5");
                    } finally {
                        send("msg7");
                    }
                    break;
            }
            send("msg7");
            new S026();
        } else {
            send("msg7");
            send("msg0");
        }
        switch (event) {
            case EV2:
                try {
                    new S093();
                } catch (TimeoutException e) {
                    send("msg0");
                    log("trace");
                } catch (IOException e) {
                    switch (event) {
                        case EV1:
                            new S076();
                            break;
                    }
                    try {
                        new S007();
                        new S005();
                        send("msg2");
                    } catch (TimeoutException e) {
                        update();
                        update();
                        send("msg7");
                    } catch (IllegalStateException e) {
                        log("trace");
                        send("msg7");
                        log("trace");
                    }
                    try {
                        new S035();
                        log("trace");
                    } catch (IllegalStateException e) {
                        send("msg6");
                    }
                } finally {
                    try {
                        send("msg4");
                    } catch (IllegalStateException e) {
                        new S084();
                        send("msg5");
                    } finally {
                        log("trace");
                        send("msg5");
                    }
                }
                try {
                    new S099();
                } catch (IOException e) {
                    try {
                        new S069();
                    } catch (TimeoutException e) {
                        new S074();
                    } catch (IOException e) {
                        send("msg6");
                        send("msg6");
                    } finally {
                        send("msg0");
                        send("msg0");
                    }
                } finally {
                    try {
                        send("msg2");
                        send("msg6");
                        send("msg5");
                    } finally {
                        new S075();
                    }
                }
                break;
            case EV5:
                if (counter > 9) {
                    log("trace");
                } else {
                    new S084();
                    switch (event) {
                        case EV5:
                            new S031();
                            break;
                        case EV4:
                            new S030();
                            break;
                        case EV0:
                            new S074();
                            log("trace");
                            new S067();
                            break;
                        default:
                            send("msg6");
                            new S062();
                            break;
                    }
                    send("msg3");
                }
                log("trace");
                break;
            case EV1:
                new S065();
                break;
        }
    }

    public void stop() {
        send("msg0");
    }

    public void tick() {
        log("trace");
        send("msg1");
        send("msg3");
    }

    public void reset() {
        new S063();
        try {
            new S007();
        } catch (IOException e) {
            switch (event) {
                case EV1:
                    send("msg7");
                    switch (event) {
                        case EV3:
                            new S035();
                            send("msg3");
                            new S017();
                            break;
                        default:
                            send("msg7");
                            new S003();
                            send("msg7");
                            break;
                    }
                    new S013();
                    break;
            }
            new S034();
            new Abstract6();
        }
        send("msg3");
    }

    public void pause() {
        new S067();
        switch (event) {
            case EV0:
                send("msg5");
                try {
                    new S084();
                    update();
                } catch (TimeoutException e) {
                    switch (event) {
                        case EV4:
                            send("msg2");
                            break;
                        case EV2:
                            log("trace");
                            break;
                        case EV1:
                            update();
                            new S036();
                            new S076();
                            break;
                    }
                    send("msg7");
                    new S017();
                } catch (IOException e) {
                    send("msg0");
                    send("msg2");
                    new S064();
                }
                break;
        }
    }

    public void resume() {
        try {
            update();
            if (counter > 9) {
                try {
                    send("msg3");
                } catch (IOException e) {
                    send("msg0");
                } finally {
                    log("trace");
                    send("msg6");
                    update();
                }
            }
        } finally {
            send("msg3");
        }
        send("msg7");
        try {
            switch (event) {
                case EV5:
                    switch (event) {
                        case EV4:
                            new S024();
                            break;
                        case EV1:
                            send("msg6");
                            send("msg4");
                            break;
                        case EV3:
                            send("msg1");
                            break;
                        default:
                            send("msg0");
                            new S072();
                            send("msg4");
                            break;
                    }
                    break;
                case EV4:
                    new S004();
                    break;
                default:
                    new S038();
                    send("msg6");
                    break;
            }
        } catch (IOException e) {
            log("trace");
            new S074();
        } catch (IllegalStateException e) {
            new S003();
        }
    }

    public void load() {
        send("msg5");
    }

    public void save() {
        send("msg6");
    }
}

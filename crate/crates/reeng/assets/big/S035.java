public class S035 extends State {
    public void open() {
        log("trace");
    }

    public void close() {
        try {
            try {
                send("msg7");
            } catch (IllegalStateException e) {
                try {
                    new S044();
                    new S053();
                } finally {
                    send("msg7");
                    new S092();
                }
                try {
                    new S095();
                } catch (IOException e) {
                    new S067();
                    send("msg7");
                } catch (TimeoutException e) {
                    new S069();
                } finally {
                    send("msg2");
                    new S010();
                    send("msg3");
                }
                if (counter > 2) {
                    new S018();
                    send("msg5");
                    send("msg5");
                }
            } catch (TimeoutException e) {
                switch (event) {
                    case EV0:
                        send("msg5");
                        send("msg7");
                        break;
                    case EV3:
                        new S033();
                        send("msg3");
                        new S083();
                        break;
                }
                send("msg1");
            } finally {
                new S081();
                log("trace");
            }
            send("msg0");
            switch (event) {
                case EV4:
                    new S000();
                    try {
                        new S085();
                        update();
                    } catch (IOException e) {
                        new Abstract5();
                        update();
                        log("trace");
                    }
                    break;
                case EV5:
                    switch (event) {
                        case EV4:
                            new S024();
                            new S060();
                            new S085();
                            break;
                        case EV2:
                            new S081();
                            send("msg0");
                            break;
                    }
                    log("trace");
                    break;
            }
        } catch (IOException e) {
            send("msg3");
            update();
        } finally {
            send("msg5");
            update();
        }
        update();
        switch (event) {
            case EV1:
                new Abstract21();
                send("msg0");
                send("msg6");
                break;
            case EV2:
                send("msg3");
                new S033();
                break;
        }
    }

    public void start() {
        switch (event) {
            case EV4:
                switch (event) {
                    case EV2:
                        new S030();
                        if (counter > 6) {
                            send("msg2");
                            send("msg0");
                        }
                        switch (event) {
                            case EV3:
                                new S058();
                                update();
                                break;
                            case EV5:
                                new S066();
                                send("msg4");
                                break;
                        }
                        break;
                }
                try {
                    send("msg6");
                    send("msg7");
                    switch (event) {
                        case EV3:
                            log("trace");
                            log("trace");
                            send("msg0");
                            break;
                    }
                } finally {
                    new S075();
                    send("msg5");
                }
                send("msg4");
                break;
        }
        send("msg2");
        send("msg3");
    }

    public void stop() {
        new S085();
    }

    public void tick() {
        try {
            log("trace");
            new S098();
            if (counter > 2) {
                send("msg7");
                send("msg7");
                send("msg5");
            }
        } catch (IllegalStateException e) {
            send("msg4");
            new S085();
        } finally {
            try {
                send("msg7");
                new S004();
                new S034();
            } finally {
                send("msg4");
                switch (event) {
                    case EV2:
                        new S032();
                        update();
                        break;
                    case EV3:
                        new S068();
                        log("trace");
                        break;
                    case EV1:
                        new S012();
                        send("msg2");
                        send("msg6");
                        break;
                }
            }
            update();
            new S038();
        }
    }

    public void reset() {
        new S096();
    }

    public void pause() {
        switch (event) {
            case EV0:
                new S082();
                break;
            default:
                update();
                new S079();
                break;
        }
    }

    public void resume() {
        update();
    }

    public void load() {
        send("msg2");
        send("msg7");
        new S040();
    }

    public void save() {
        try {
            send("msg1");
        } catch (IllegalStateException e) {
            send("msg7");
            try {
                new Abstract3();
                new S037();
            } finally {
                try {
                    log("trace");
                    send("msg1");
                } finally {
                    send("msg4");
                    send("msg2");
                }
                switch (event) {
                    case EV0:
                        new S001();
                        update();
                        break;
                    case EV3:
                        log("trace");
                        update();
                        update();
                        break;
                }
            }
        } catch (TimeoutException e) {
            switch (event) {
                case EV0:
                    new S097();
                    new S020();
                    send("msg5");
                    break;
                case EV5:
                    switch (event) {
                        case EV4:
                            send("msg6");
                            break;
                    }
                    try {
                        new S067();
                        send("msg1");
                    } catch (IOException e) {
                        send("msg1");
                    } catch (IllegalStateException e) {
                        new S069();
                        new S012();
                        update();
                    }
                    try {
                        new S003();
                        new S030();
                    } catch (TimeoutException e) {
                        new S075();
                        new S023();
                    } catch (IllegalStateException e) {
                        update();
                        send("msg2");
                        new S044();
                    }
                    break;
                default:
                    send("msg5");
                    break;
            }
            send("msg7");
        }
        send("msg2");
        update();
    }
}

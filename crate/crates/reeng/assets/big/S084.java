public class S084 extends Abstract0 {
    public void open() {
        send("msg4");
    }

    public void close() {
        log("trace");
    }

    public void start() {
        send("msg5");
        new S062();
        try {
            if (counter > 7) {
                send("msg2");
            } else {
                send("msg5");
            }
        } catch (TimeoutException e) {
            send("msg7");
        }
    }

    public void stop() {
        new Abstract9();
        new S022();
    }

    public void tick() {
        log("trace");
    }

    public void reset() {
        new S040();
    }

    public void pause() {
        try {
            new S079();
            if (counter > 3) {
                try {
                    new S071();
                    log("trace");
                } catch (TimeoutException e) {
                    send("msg1");
                    new S003();
                } catch (IllegalStateException e) {
                    send("msg4");
                    send("msg1");
                }
            } else {
                log("trace");
                send("msg1");
            }
        } catch (IllegalStateException e) {
            new S047();
            switch (event) {
                case EV0:
                    send("msg0");
                    send("msg7");
                    break;
                case EV5:
                    new Abstract2();
                    send("msg0");
                    break;
                case EV4:
                    send("msg7");
                    break;
            }
        } finally {
            log("trace");
            send("msg4");
            try {
                new S073();
                new S067();
                new Abstract8();
            } catch (IOException e) {
                new S078();
            } catch (IllegalStateException e) {
                try {
                    new S045();
                } catch (IOException e) {
                    send("msg3");
                } finally {
                    send("msg6");
                }
                switch (event) {
                    case EV2:
                        send("msg2");
                        new S096();
                        new S024();
                        break;
                    case EV3:
                        send("msg2");
                        new S012();
                        send("msg0");
                        break;
                }
                send("msg1");
            }
        }
    }

    public void resume() {
        send("msg2");
        log("trace");
        try {
            new S019();
            try {
                send("msg4");
                new S078();
            } catch (TimeoutException e) {
                send("msg7");
                send("msg5");
            }
            new S040();
        } finally {
            switch (event) {
                case EV4:
                    send("msg2");
                    try {
                        new S053();
                    } catch (TimeoutException e) {
                        new S028();
                    }
                    if (counter > 7) {
                        new S075();
                        send("msg2");
                        log("trace");
                    }
                    break;
                case EV3:
                    send("msg3");
                    break;
            }
            log("trace");
        }
    }

    public void load() {
        send("msg0");
        switch (event) {
            case EV2:
                send("msg3");
                break;
        }
        try {
            if (counter > 7) {
                send("msg5");
            } else {
                send("msg7");
            }
            switch (event) {
                case EV2:
                    new S010();
                    break;
                case EV4:
                    log("trace");
                    send("msg3");
                    switch (event) {
                        case EV4:
                            new S084();
                            break;
                        default:
                            send("msg0");
                            send("msg4");
                            break;
                    }
                    break;
                case EV0:
                    try {
                        send("msg0");
                        log("trace");
                    } catch (IllegalStateException e) {
                        log("trace");
                        update();
                        update();
                    }
                    break;
                default:
                    try {
                        send("msg4");
                        new S060();
                        new Abstract4();
                    } catch (IOException e) {
                        log("trace");
                        new S067();
                    } catch (IllegalStateException e) {
                        send("msg6");
                        send("msg6");
                        new S043();
                    }
                    break;
            }
        } catch (IllegalStateException e) {
            new S065();
            log("trace");
        } catch (IOException e) {
            log("trace");
        }
    }

    public void save() {
        send("msg7");
        log("trace");
        if (counter > 7) {
            try {
                send("msg5");
            } catch (IllegalStateException e) {
                if (counter > 0) {
                    new S049();
                } else {
                    send("msg4");
                }
            }
            send("msg2");
            send("msg7");
        }
    }
}

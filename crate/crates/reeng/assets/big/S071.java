public class S071 extends State {
    public void open() {
        send("msg3");
        switch (event) {
            case EV4:
                switch (event) {
                    case EV3:
                        send("msg7");
                        new S077();
                        try {
                            send("msg5");
                            send("msg0");
                            log("trace");
                        } catch (TimeoutException e) {
                            update();
                            update();
                        } catch (IOException e) {
                            send("msg2");
                        } finally {
                            update();
                        }
                        break;
                }
                switch (event) {
                    case EV4:
                        log("trace");
                        send("msg4");
                        break;
                    case EV2:
                        new S090();
                        break;
                    case EV0:
                        new S051();
                        send("msg7");
                        new S085();
                        break;
                }
                break;
            default:
                new S040();
                new S003();
                new S069();
                break;
        }
    }

    public void close() {
        if (counter > 0) {
            try {
                if (counter > 4) {
                    send("msg3");
                    send("msg0");
                    send("msg6");
                }
                new S049();
            } finally {
                update();
                log("trace");
            }
        }
        try {
            switch (event) {
                case EV3:
                    send("msg5");
                    send("msg2");
                    break;
            }
            try {
                switch (event) {
                    case EV2:
                        new S075();
                        send("msg3");
                        send("msg3");
                        break;
                }
                try {
                    send("msg6");
                } finally {
                    update();
                    new S026();
                    new S007();
                }
            } catch (IOException e) {
                new S069();
                try {
                    send("msg4");
                } finally {
                    send("msg1");
                    update();
                    log("trace");
                }
            } catch (IllegalStateException e) {
                new S019();
            } finally {
                if (counter > 7) {
                    send("msg2");
                } else {
                    update();
                    new Abstract8();
                    send("msg7");
                }
                send("msg5");
                update();
            }
        } catch (IOException e) {
            send("msg1");
        } finally {
            update();
            send("msg4");
        }
        update();
    }

    public void start() {
        if (counter > 6) {
            send("msg4");
            switch (event) {
                case EV2:
                    log("trace");
                    break;
                case EV4:
                    switch (event) {
                        case EV4:
                            new S064();
                            send("msg4");
                            send("msg1");
                            break;
                    }
                    update();
                    send("msg6");
                    break;
                case EV5:
                    send("msg0");
                    send("msg4");
                    break;
            }
        }
        update();
    }

    public void stop() {
        send("msg3");
    }

    public void tick() {
        send("msg7");
    }

    public void reset() {
        switch (event) {
            case EV2:
                try {
                    log("trace");
                } catch (TimeoutException e) {
                    new S051();
                } catch (IllegalStateException e) {
                    new S084();
                    send("msg5");
                } finally {
                    send("msg1");
                }
                send("msg0");
                break;
        }
        send("msg1");
    }

    public void pause() {
        switch (event) {
            case EV2:
                if (counter > 2) {
                    send("msg4");
                    new S079();
                    send("msg5");
                }
                send("msg1");
                send("msg2");
                break;
            case EV5:
                switch (event) {
                    case EV1:
                        try {
                            new S010();
                            new S048();
                        } finally {
                            send("msg2");
                            send("msg6");
                            new S044();
                        }
                        break;
                    case EV0:
                        log("trace");
                        break;
                    case EV2:
                        if (counter > 1) {
                            new S024();
                            send("msg4");
                        }
                        break;
                    default:
                        send("msg1");
                        if (counter > 2) {
                            send("msg6");
                            new S000();
                            new S054();
                        }
                        if (counter > 6) {
                            send("msg0");
                            new S041();
                        }
                        break;
                }
                send("msg1");
                break;
            case EV4:
                send("msg4");
                send("msg4");
                break;
        }
    }

    public void resume() {
        update();
        new Helper();
        send("msg0");
    }

    public void load() {
        if (counter > 0) {
            new S024();
            new Abstract7();
        }
    }

    public void save() {
        send("msg1");
        log("trace");
    }
}

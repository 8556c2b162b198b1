public class S090 extends Abstract8 {
    public void open() {
        try {
            try {
                try {
                    update();
                    send("msg1");
                    update();
                } catch (IllegalStateException e) {
                    send("msg7");
                    new S046();
                    send("msg5");
                }
                new S075();
                new S079();
            } finally {
                new S079();
            }
            send("msg0");
            send("msg1");
        } finally {
            log("trace");
            if (counter > 0) {
                if (counter > 8) {
                    log("trace");
                } else {
                    new S050();
                    new S028();
                    new S059();
                }
            }
            new S006();
        }
    }

    public void close() {
        send("msg0");
    }

    public void start() {
        switch (event) {
            case EV4:
                new S016();
                if (counter > 9) {
                    log("trace");
                }
                break;
            case EV5:
                try {
                    send("msg4");
                } catch (TimeoutException e) {
                    update();
                }
                break;
        }
        new S041();
    }

    public void stop() {
        new S078();
        switch (event) {
            case EV3:
                send("msg5");
                break;
            case EV2:
                send("msg6");
                send("msg7");
                if (counter > 8) {
                    send("msg4");
                    if (counter > 1) {
                        send("msg0");
                        new S019();
                    }
                } else {
                    if (counter > 8) {
                        new S075();
                        log("trace");
                    } else {
                        send("msg6");
                        new S038();
                    }
                    send("msg4");
                    if (counter > 4) {
                        send("msg2");
                        new Abstract22();
                        new S041();
                    } else {
                        new S060();
                        new S070();
                    }
                }
                break;
        }
    }

    public void tick() {
        new S026();
    }

    public void reset() {
        switch (event) {
            case EV5:
                new S097();
                break;
            case EV1:
                if (counter > 0) {
                    try {
                        send("msg4");
                        send("msg5");
                    } catch (TimeoutException e) {
                        update();
                        new S033();
                    } finally {
                        new S036();
                        new S081();
                        send("msg7");
                    }
                    send("msg2");
                    send("msg6");
                }
                new S092();
                break;
        }
    }

    public void pause() {
        try {
            send("msg5");
            if (counter > 5) {
                send("msg5");
            } else {
                switch (event) {
                    case EV4:
                        send("msg2");
                        break;
                    case EV2:
                        log("trace");
                        send("msg5");
                        break;
                    case EV1:
                        new S041();
                        send("msg7");
                        new S042();
                        break;
                }
                new S092();
            }
            update();
        } catch (IOException e) {
            try {
                update();
                switch (event) {
                    case EV4:
                        send("msg7");
                        new S025();
                        break;
                    case EV5:
                        update();
                        new S047();
                        break;
                }
                send("msg0");
            } finally {
                new S079();
                if (counter > 6) {
                    send("msg1");
                }
                update();
            }
            new S078();
        } catch (IllegalStateException e) {
            send("msg5");
            send("msg3");
            switch (event) {
                case EV4:
                    send("msg3");
                    new S059();
                    if (counter > 6) {
                        send("msg2");
                        send("msg6");
                    }
                    break;
            }
        }
    }

    public void resume() {
        if (counter > 6) {
            send("msg0");
        }
        send("msg5");
    }

    public void load() {
        send("msg6");
        if (counter > 1) {
            send("msg4");
        }
        send("msg1");
    }

    public void save() {
        try {
            log("trace");
        } catch (TimeoutException e) {
            switch (event) {
                case EV1:
                    switch (event) {
                        case EV2:
                            new S020();
                            new S022();
                            send("msg2");
                            break;
                        case EV5:
                            log("trace");
                            break;
                        case EV0:
                            send("msg1");
                            log("trace");
                            log("trace");
                            break;
                        default:
                            log("trace");
                            send("msg6");
                            new S061();
                            break;
                    }
                    break;
                case EV0:
                    update();
                    new S029();
                    break;
                case EV5:
                    new S072();
                    break;
                default:
                    new S083();
                    send("msg7");
                    break;
            }
        } catch (IOException e) {
            update();
        }
        switch (event) {
            case EV5:
                new S077();
                send("msg5");
                break;
        }
        update();
    }
}

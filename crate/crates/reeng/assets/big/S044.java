public class S044 extends State {
    public void open() {
        switch (event) {
            case EV0:
                send("msg2");
                if (counter > 8) {
                    send("msg3");
                    try {
                        send("msg1");
                        new Abstract22();
                    } catch (TimeoutException e) {
                        send("msg5");
                    }
                } else {
                    switch (event) {
                        case EV2:
                            send("msg5");
                            break;
                        default:
                            new S002();
                            new S021();
                            send("msg5");
                            break;
                    }
                    new S074();
                }
                break;
            case EV4:
                send("msg6");
                break;
        }
    }

    public void close() {
        send("msg6");
        send("msg3");
        if (counter > 9) {
            try {
                send("msg5");
            } catch (IllegalStateException e) {
                if (counter > 1) {
                    send("msg4");
                    send("msg5");
                    send("msg2");
                }
                new S072();
                switch (event) {
                    case EV5:
                        send("msg1");
                        update();
                        break;
                    case EV2:
                        send("msg5");
                        break;
                    default:
                        send("msg7");
                        new S056();
                        break;
                }
            }
            new S020();
            send("msg1");
        } else {
            if (counter > 7) {
                new Abstract3();
                new Abstract1();
                send("msg7");
            }
        }
    }

    public void start() {
        log("trace");
    }

    public void stop() {
        try {
            new S072();
            if (counter > 6) {
                update();
                if (counter > 2) {
                    log("trace");
                    new S035();
                } else {
                    log("trace");
                    send("msg3");
                }
            }
        } finally {
            switch (event) {
                case EV5:
                    send("msg0");
                    break;
                case EV3:
                    send("msg3");
                    log("trace");
                    update();
                    break;
                case EV1:
                    send("msg6");
                    break;
                default:
                    new S036();
                    break;
            }
        }
    }

    public void tick() {
        new S094();
        send("msg4");
    }

    public void reset() {
        new S098();
        send("msg1");
    }

    public void pause() {
        log("trace");
        new S087();
        log("trace");
    }

    public void resume() {
        try {
            new S094();
            new S050();
            log("trace");
        } finally {
            if (counter > 8) {
                switch (event) {
                    case EV3:
                        log("trace");
                        break;
                }
            }
        }
    }

    public void load() {
        switch (event) {
            case EV0:
                send("msg3");
                break;
            case EV2:
                log("trace");
                break;
        }
        log("trace");
    }

    public void save() {
        new S058();
        send("msg5");
        new S045();
    }
}

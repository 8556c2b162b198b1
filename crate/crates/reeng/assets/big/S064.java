public class S064 extends State {
    public void open() {
        send("msg3");
        update();
        new S042();
    }

    public void close() {
        try {
            update();
        } catch (IllegalStateException e) {
            send("msg7");
            log("trace");
        }
        if (counter > 4) {
            new S019();
        } else {
            send("msg2");
        }
    }

    public void start() {
        new Abstract22();
        new S041();
    }

    public void stop() {
        update();
        new S017();
    }

    public void tick() {
        new S012();
    }

    public void reset() {
        send("msg3");
        if (counter > 2) {
            send("msg3");
        }
    }

    public void pause() {
        switch (event) {
            case EV1:
                log("trace");
                new S069();
                break;
            case EV5:
                if (counter > 4) {
                    send("msg3");
                }
                send("msg3");
                if (counter > 6) {
                    new S025();
                    update();
                } else {
                    new S008();
                    send("msg2");
                }
                break;
            case EV0:
                new S035();
                new S076();
                break;
        }
        if (counter > 5) {
            send("msg0");
        }
        send("msg1");
    }

    public void resume() {
        switch (event) {
            case EV1:
                try {
                    new S059();
                    send("msg6");
                } catch (IllegalStateException e) {
                    switch (event) {
                        case EV0:
                            update();
                            break;
                        case EV1:
                            new S060();
                            break;
                    }
                    try {
                        new Abstract13();
                        send("msg7");
                        send("msg5");
                    } catch (IllegalStateException e) {
                        new S002();
                        send("msg2");
                        log("trace");
                    } catch (IOException e) {
                        update();
                        new S055();
                    } finally {
                        new S011();
                    }
                    send("msg4");
                }
                break;
            case EV2:
                new S014();
                send("msg7");
                break;
            case EV3:
                send("msg3");
                break;
            default:
                new S013();
                send("msg7");
                break;
        }
    }

    public void load() {
        send("msg3");
        new S050();
    }

    public void save() {
        update();
        try {
            new S034();
        } finally {
            switch (event) {
                case EV2:
                    send("msg4");
                    try {
                        send("msg3");
                    } catch (TimeoutException e) {
                        new Abstract12();
                    } catch (IllegalStateException e) {
                        update();
                        send("msg7");
                    }
                    break;
                case EV3:
                    send("msg3");
                    log("trace");
                    break;
            }
            log("trace");
        }
        new S072();
    }
}

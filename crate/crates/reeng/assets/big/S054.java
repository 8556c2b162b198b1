public class S054 extends Abstract19 {
    public void open() {
        if (counter > 6) {
            new S048();
        }
    }

    public void close() {
        send("msg3");
        new S090();
    }

    public void start() {
        switch (event) {
            case EV1:
                new S097();
                break;
            case EV0:
                if (counter > 7) {
                    new S067();
                    send("msg2");
                    send("msg2");
                }
                new S005();
                break;
            case EV2:
                new S068();
                break;
            default:
                try {
                    if (counter > 5) {
                        new S039();
                    } else {
                        send("msg5");
                    }
                } catch (TimeoutException e) {
                    switch (event) {
                        case EV0:
                            new S083();
                            new S078();
                            break;
                        case EV3:
                            new S062();
                            new S083();
                            send("msg1");
                            break;
                    }
                }
                if (counter > 4) {
                    send("msg1");
                    new S079();
                } else {
                    send("msg5");
                    send("msg5");
                    log("trace");
                }
                break;
        }
    }

    public void stop() {
        update();
    }

    public void tick() {
        try {
            send("msg6");
            update();
        } catch (IllegalStateException e) {
            new Abstract8();
            send("msg4");
        } catch (IOException e) {
            switch (event) {
                case EV4:
                    send("msg3");
                    log("trace");
                    break;
            }
        }
        if (counter > 7) {
            switch (event) {
                case EV4:
                    send("msg5");
                    send("msg7");
                    break;
                default:
                    new S070();
                    switch (event) {
                        case EV5:
                            send("msg2");
                            break;
                        case EV3:
                            update();
                            send("msg1");
                            break;
                        case EV2:
                            new S057();
                            new Helper();
                            break;
                    }
                    if (counter > 3) {
                        send("msg7");
                    }
                    break;
            }
        }
    }

    public void reset() {
        log("trace");
        if (counter > 1) {
            new S061();
            send("msg6");
        }
        if (counter > 5) {
            send("msg4");
            new S012();
            log("trace");
        } else {
            new S015();
        }
    }

    public void pause() {
        send("msg6");
    }

    public void resume() {
        send("msg7");
    }

    public void load() {
        new S025();
        new S006();
    }

    public void save() {
        new S072();
    }
}

public class S26 extends Abstract5 {
    public void open() {
        new S22();
        send("msg0");
    }

    public void close() {
        try {
            try {
                new S09();
            } finally {
                update();
                send("msg7");
                send("msg2");
            }
        } catch (IOException e) {
            update();
            new S16();
            if (counter > 8) {
                new S10();
                send("msg3");
            } else {
                send("msg1");
                new S07();
            }
        } catch (IllegalStateException e) {
            new S13();
        }
        switch (event) {
            case EV2:
                try {
                    new S22();
                    send("msg4");
                    new S27();
                } catch (IOException e) {
                    new Abstract2();
                } catch (IllegalStateException e) {
                    new S25();
                    new S28();
                    new S16();
                }
                send("msg4");
                new Helper();
                break;
        }
        switch (event) {
            case EV3:
                switch (event) {
                    case EV3:
                        new Abstract5();
                        new S27();
                        log("trace");
                        break;
                    case EV5:
                        send("msg7");
                        new S14();
                        break;
                }
                new S14();
                break;
            case EV1:
                switch (event) {
                    case EV3:
                        send("msg7");
                        new S03();
                        send("msg6");
                        break;
                }
                send("msg4");
                break;
            default:
                switch (event) {
                    case EV3:
                        send("msg0");
                        new S27();
                        break;
                    case EV1:
                        log("trace");
                        new S28();
                        break;
                }
                break;
        }
    }

    public void start() {
        send("msg7");
        update();
    }

    public void stop() {
        new S06();
        send("msg2");
    }

    public void tick() {
        if (counter > 7) {
            send("msg5");
            new S06();
        } else {
            log("trace");
            if (counter > 3) {
                log("trace");
                new S01();
                send("msg7");
            }
        }
        if (counter > 3) {
            log("trace");
            update();
        } else {
            log("trace");
        }
        if (counter > 5) {
            log("trace");
            new S10();
            try {
                new S29();
                new S04();
                update();
            } catch (TimeoutException e) {
                update();
            } catch (IllegalStateException e) {
                send("msg0");
                new S14();
            }
        }
    }
}

public class S04 extends State {
    public void open() {
        try {
            new S12();
        } catch (IllegalStateException e) {
            send("msg0");
            try {
                new S22();
                send("msg0");
                new S09();
            } finally {
                log("trace");
            }
        }
        new S26();
        send("msg5");
    }

    public void close() {
        switch (event) {
            case EV2:
                try {
                    new S25();
                    log("trace");
                    new S27();
                } catch (TimeoutException e) {
                    new S11();
                } finally {
                    update();
                }
                break;
            case EV4:
                send("msg1");
                break;
        }
    }

    public void start() {
        try {
            log("trace");
        } catch (IOException e) {
            switch (event) {
                case EV2:
                    log("trace");
                    log("trace");
                    break;
                case EV3:
                    send("msg3");
                    new S20();
                    send("msg7");
                    break;
                default:
                    new Helper();
                    new S15();
                    new S07();
                    break;
            }
            send("msg0");
        } catch (IllegalStateException e) {
            new S29();
            send("msg7");
        }
    }

    public void stop() {
        new S08();
        send("msg2");
    }

    public void tick() {
        if (counter > 2) {
            update();
            try {
                update();
                new S19();
                new Abstract0();
            } catch (IllegalStateException e) {
                send("msg6");
                send("msg1");
            } catch (TimeoutException e) {
                send("msg4");
                update();
            } finally {
                send("msg1");
            }
            try {
                new S24();
                new S00();
                update();
            } catch (IllegalStateException e) {
                new S28();
            } catch (IOException e) {
                log("trace");
            } finally {
                new S13();
                send("msg5");
                new S25();
            }
        } else {
            send("msg6");
            if (counter > 4) {
                new S14();
                log("trace");
            }
        }
    }
}

public class S02 extends State {
    public void open() {
        try {
            try {
                send("msg0");
            } catch (TimeoutException e) {
                send("msg0");
                update();
                new S05();
            } catch (IOException e) {
                new S04();
                new S01();
                new S29();
            } finally {
                send("msg1");
            }
            switch (event) {
                case EV1:
                    new S02();
                    new S05();
                    log("trace");
                    break;
            }
        } finally {
            new S24();
            if (counter > 9) {
                update();
            }
            send("msg5");
        }
    }

    public void close() {
        if (counter > 3) {
            new S09();
            if (counter > 2) {
                new S24();
                send("msg3");
            }
        }
        send("msg2");
    }

    public void start() {
        send("msg4");
        switch (event) {
            case EV4:
                if (counter > 5) {
                    send("msg1");
                    send("msg6");
                }
                break;
            case EV0:
                try {
                    new S04();
                    send("msg5");
                    new S21();
                } finally {
                    new S02();
                    new S23();
                }
                update();
                switch (event) {
                    case EV0:
                        send("msg2");
                        send("msg4");
                        update();
                        break;
                    case EV3:
                        new S22();
                        break;
                    case EV2:
                        update();
                        break;
                }
                break;
            default:
                new S02();
                send("msg5");
                break;
        }
    }

    public void stop() {
        log("trace");
        new S14();
        log("trace");
    }

    public void tick() {
        switch (event) {
            case EV5:
                new S21();
                if (counter > 0) {
                    new S22();
                    new S14();
                }
                break;
            default:
                if (counter > 7) {
                    send("msg4");
                    new S05();
                } else {
                    new S11();
                }
                break;
        }
        new S06();
        send("msg0");
    }
}

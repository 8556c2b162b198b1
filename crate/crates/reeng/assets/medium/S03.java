public class S03 extends State {
    public void open() {
        if (counter > 9) {
            switch (event) {
                case EV5:
                    send("msg7");
                    break;
                default:
                    new S07();
                    new Abstract3();
                    log("trace");
                    break;
            }
            if (counter > 8) {
                send("msg0");
            }
            new S25();
        }
    }

    public void close() {
        switch (event) {
            case EV5:
                send("msg7");
                new S10();
                break;
            case EV0:
                update();
                break;
            case EV1:
                new Abstract6();
                switch (event) {
                    case EV3:
                        log("trace");
                        update();
                        break;
                    case EV4:
                        send("msg2");
                        send("msg5");
                        break;
                    default:
                        new S06();
                        new S16();
                        break;
                }
                break;
        }
        try {
            send("msg4");
            update();
            new S25();
        } finally {
            try {
                send("msg7");
                send("msg2");
                send("msg3");
            } catch (IOException e) {
                send("msg3");
                send("msg7");
            } finally {
                new S13();
            }
            switch (event) {
                case EV2:
                    update();
                    send("msg7");
                    break;
            }
        }
        try {
            send("msg5");
            update();
            send("msg6");
        } catch (IllegalStateException e) {
            switch (event) {
                case EV5:
                    new S10();
                    new S11();
                    break;
                default:
                    new S24();
                    update();
                    send("msg1");
                    break;
            }
            switch (event) {
                case EV1:
                    log("trace");
                    break;
                case EV3:
                    send("msg3");
                    new S23();
                    break;
                case EV0:
                    send("msg6");
                    log("trace");
                    new S19();
                    break;
            }
        } catch (IOException e) {
            log("trace");
            switch (event) {
                case EV5:
                    update();
                    break;
                case EV4:
                    update();
                    send("msg2");
                    break;
            }
        }
    }

    public void start() {
        new S29();
        switch (event) {
            case EV1:
                log("trace");
                new S07();
                break;
            case EV5:
                switch (event) {
                    case EV3:
                        send("msg0");
                        log("trace");
                        break;
                    case EV5:
                        send("msg6");
                        new S13();
                        break;
                    case EV4:
                        send("msg5");
                        new S28();
                        send("msg1");
                        break;
                }
                send("msg0");
                break;
            case EV0:
                update();
                send("msg3");
                new S07();
                break;
        }
    }

    public void stop() {
        if (counter > 7) {
            switch (event) {
                case EV5:
                    new S16();
                    new S01();
                    new Abstract1();
                    break;
                case EV2:
                    send("msg5");
                    break;
                case EV4:
                    new S06();
                    send("msg7");
                    break;
                default:
                    send("msg7");
                    new S19();
                    new S15();
                    break;
            }
        } else {
            send("msg2");
            if (counter > 0) {
                new S19();
                send("msg1");
                send("msg3");
            }
            new S29();
        }
        switch (event) {
            case EV0:
                new S16();
                new Abstract5();
                new S03();
                break;
        }
        try {
            send("msg5");
            new S16();
            try {
                update();
            } catch (TimeoutException e) {
                send("msg6");
                log("trace");
                new S29();
            } finally {
                log("trace");
                update();
            }
        } finally {
            send("msg2");
        }
    }

    public void tick() {
        update();
        new S21();
    }
}

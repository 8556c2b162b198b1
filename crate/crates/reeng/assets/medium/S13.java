public class S13 extends State {
    public void open() {
        new S15();
    }

    public void close() {
        new S06();
        send("msg2");
        send("msg7");
    }

    public void start() {
        new S21();
        new S04();
    }

    public void stop() {
        switch (event) {
            case EV1:
                switch (event) {
                    case EV0:
                        send("msg2");
                        log("trace");
                        break;
                    default:
                        new S19();
                        send("msg0");
                        send("msg1");
                        break;
                }
                break;
            case EV0:
                send("msg5");
                break;
            case EV2:
                send("msg2");
                send("msg3");
                try {
                    send("msg6");
                    send("msg1");
                } finally {
                    log("trace");
                    log("trace");
                }
                break;
        }
    }

    public void tick() {
        new S07();
        new S02();
    }
}

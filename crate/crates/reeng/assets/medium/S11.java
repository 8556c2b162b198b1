public class S11 extends Abstract2 {
    public void open() {
        send("msg7");
    }

    public void close() {
        send("msg2");
        switch (event) {
            case EV3:
                send("msg4");
                new S25();
                break;
            case EV0:
                update();
                send("msg0");
                break;
            default:
                new S18();
                log("trace");
                update();
                break;
        }
    }

    public void start() {
        switch (event) {
            case EV0:
                try {
                    new Abstract4();
                    send("msg2");
                } finally {
                    log("trace");
                    send("msg0");
                }
                break;
            case EV1:
                new S14();
                send("msg6");
                break;
        }
    }

    public void stop() {
        new S17();
    }

    public void tick() {
        send("msg2");
        new S25();
    }
}

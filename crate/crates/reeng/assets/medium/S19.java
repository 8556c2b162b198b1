public class S19 extends State {
    public void open() {
        send("msg1");
        new Helper();
        new S26();
    }

    public void close() {
        send("msg6");
    }

    public void start() {
        send("msg5");
        switch (event) {
            case EV2:
                new S17();
                break;
            case EV4:
                update();
                new S11();
                send("msg2");
                break;
            default:
                if (counter > 3) {
                    log("trace");
                } else {
                    send("msg7");
                    send("msg5");
                }
                send("msg5");
                send("msg2");
                break;
        }
        new S00();
    }

    public void stop() {
        send("msg0");
        new S25();
        new S02();
    }

    public void tick() {
        send("msg7");
        new Abstract6();
    }
}

public class S17 extends State {
    public void open() {
        send("msg2");
        new S08();
        send("msg4");
    }

    public void close() {
        send("msg1");
        update();
        try {
            switch (event) {
                case EV3:
                    new S28();
                    send("msg2");
                    send("msg1");
                    break;
                case EV4:
                    send("msg1");
                    break;
            }
            try {
                update();
                send("msg5");
            } finally {
                new S27();
            }
        } catch (TimeoutException e) {
            new S20();
        }
    }

    public void start() {
        send("msg1");
        new S20();
    }

    public void stop() {
        new S06();
        new S24();
        update();
    }

    public void tick() {
        try {
            log("trace");
            switch (event) {
                case EV4:
                    send("msg7");
                    break;
                case EV0:
                    send("msg7");
                    break;
                case EV1:
                    new S00();
                    break;
            }
        } catch (TimeoutException e) {
            send("msg5");
        } finally {
            new Abstract0();
            send("msg3");
        }
        new S13();
    }
}

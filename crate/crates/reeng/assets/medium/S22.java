public class S22 extends State {
    public void open() {
        new S07();
    }

    public void close() {
        new S16();
        send("msg4");
    }

    public void start() {
        switch (event) {
            case EV2:
                if (counter > 5) {
                    send("msg7");
                }
                switch (event) {
                    case EV5:
                        send("msg1");
                        break;
                    case EV3:
                        send("msg6");
                        break;
                }
                send("msg7");
                break;
            case EV1:
                new Abstract1();
                send("msg1");
                new Abstract0();
                break;
            case EV0:
                new S28();
                if (counter > 2) {
                    new S11();
                    send("msg1");
                    send("msg5");
                }
                if (counter > 0) {
                    new S06();
                    new S11();
                    log("trace");
                }
                break;
        }
        try {
            new S08();
        } finally {
            update();
        }
        try {
            if (counter > 9) {
                send("msg1");
                send("msg7");
            }
            send("msg5");
        } catch (IllegalStateException e) {
            log("trace");
            new Abstract6();
        }
    }

    public void stop() {
        send("msg3");
    }

    public void tick() {
        new S13();
        log("trace");
    }
}

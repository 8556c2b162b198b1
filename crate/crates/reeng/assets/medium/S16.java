public class S16 extends Abstract2 {
    public void open() {
        send("msg3");
        new S10();
        if (counter > 7) {
            if (counter > 2) {
                send("msg6");
                send("msg6");
                new S07();
            } else {
                send("msg6");
                new S02();
                update();
            }
            switch (event) {
                case EV3:
                    new S24();
                    new Abstract1();
                    break;
                case EV2:
                    update();
                    new Abstract3();
                    break;
                case EV0:
                    new S26();
                    break;
            }
            try {
                new S02();
                send("msg3");
            } finally {
                send("msg1");
                send("msg5");
            }
        }
    }

    public void close() {
        new S25();
        new S04();
    }

    public void start() {
        send("msg3");
        send("msg4");
    }

    public void stop() {
        if (counter > 8) {
            send("msg6");
        }
    }

    public void tick() {
        log("trace");
        send("msg5");
    }
}

public class S10 extends Abstract6 {
    public void open() {
        send("msg7");
    }

    public void close() {
        try {
            try {
                new S27();
                send("msg7");
            } catch (IOException e) {
                new Abstract1();
                send("msg1");
            }
        } catch (IOException e) {
            try {
                update();
                update();
                new S01();
            } catch (IllegalStateException e) {
                send("msg5");
                update();
                send("msg1");
            } catch (TimeoutException e) {
                send("msg2");
                new S12();
                update();
            }
        } finally {
            send("msg1");
            switch (event) {
                case EV5:
                    new S22();
                    log("trace");
                    break;
                case EV3:
                    new S13();
                    new S00();
                    break;
            }
        }
    }

    public void start() {
        if (counter > 1) {
            try {
                new S14();
            } finally {
                new S27();
            }
        } else {
            new S16();
            send("msg6");
            send("msg2");
        }
    }

    public void stop() {
        send("msg1");
        if (counter > 5) {
            send("msg3");
        } else {
            try {
                new S18();
                send("msg5");
            } finally {
                send("msg6");
                new S24();
                log("trace");
            }
            switch (event) {
                case EV1:
                    new S11();
                    send("msg3");
                    break;
                case EV2:
                    new S18();
                    new S27();
                    new Abstract1();
                    break;
                case EV0:
                    new S03();
                    send("msg1");
                    break;
            }
        }
    }

    public void tick() {
        if (counter > 2) {
            switch (event) {
                case EV5:
                    log("trace");
                    log("trace");
                    new S16();
                    break;
                case EV4:
                    new S11();
                    send("msg4");
                    new S13();
                    break;
            }
        } else {
            log("trace");
            try {
                send("msg3");
                send("msg5");
            } finally {
                send("msg6");
                log("trace");
                new S27();
            }
            send("msg2");
        }
    }
}

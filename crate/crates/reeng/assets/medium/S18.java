public class S18 extends Abstract4 {
    public void open() {
        send("msg0");
    }

    public void close() {
        switch (event) {
            case EV5:
                try {
                    send("msg0");
                    send("msg4");
                    send("msg6");
                } catch (TimeoutException e) {
                    send("msg5");
                    log("trace");
                    send("msg6");
                } catch (IOException e) {
                    log("trace");
                    update();
                    send("msg5");
                }
                break;
        }
        new S10();
    }

    public void start() {
        switch (event) {
            case EV0:
                switch (event) {
                    case EV3:
                        new Helper();
                        new S26();
                        new S11();
                        break;
                    case EV4:
                        log("trace");
                        break;
                }
                new S22();
                try {
                    log("trace");
                } finally {
                    new S14();
                    new S03();
                }
                break;
            case EV5:
                update();
                break;
        }
        new S03();
    }

    public void stop() {
        if (counter > 0) {
            new S19();
        }
    }

    public void tick() {
        log("trace");
        log("trace");
    }
}

public class S06 extends Abstract0 {
    public void open() {
        new S16();
        log("trace");
        send("msg7");
    }

    public void close() {
        new S22();
    }

    public void start() {
        send("msg6");
        send("msg2");
    }

    public void stop() {
        log("trace");
        try {
            update();
            try {
                new S11();
            } catch (IllegalStateException e) {
                update();
                new S25();
                new S12();
            } catch (IOException e) {
                send("msg5");
                send("msg2");
                log("trace");
            }
            try {
                send("msg5");
                send("msg6");
                send("msg5");
            } finally {
                send("msg5");
                send("msg1");
            }
        } finally {
            switch (event) {
                case EV4:
                    log("trace");
                    new S06();
                    send("msg2");
                    break;
                case EV3:
                    new S25();
                    break;
                case EV2:
                    log("trace");
                    new S18();
                    break;
            }
        }
    }

    public void tick() {
        send("msg0");
        new S21();
        log("trace");
    }
}

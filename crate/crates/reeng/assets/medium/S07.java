public class S07 extends State {
    public void open() {
        new S12();
        try {
            log("trace");
            send("msg6");
        } catch (IllegalStateException e) {
            update();
            if (counter > 7) {
                new S02();
                send("msg6");
                send("msg0");
            } else {
                new S23();
                new Abstract2();
                send("msg6");
            }
        }
        new S06();
    }

    public void close() {
        send("msg1");
        send("msg0");
    }

    public void start() {
        update();
        new S09();
    }

    public void stop() {
        send("msg4");
        log("trace");
    }

    public void tick() {
        if (counter > 7) {
            send("msg0");
        } else {
            try {
                update();
                send("msg4");
            } catch (TimeoutException e) {
                log("trace");
            } finally {
                log("trace");
            }
        }
    }
}

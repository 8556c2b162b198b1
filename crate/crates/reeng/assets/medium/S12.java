public class S12 extends Abstract4 {
    public void open() {
        update();
    }

    public void close() {
        send("msg2");
    }

    public void start() {
        new S07();
    }

    public void stop() {
        if (counter > 7) {
            log("trace");
            new S09();
        }
        new S21();
        if (counter > 9) {
            send("msg2");
            send("msg0");
            if (counter > 5) {
                update();
                send("msg4");
                log("trace");
            }
        } else {
            log("trace");
            send("msg5");
            new S25();
        }
    }

    public void tick() {
        send("msg6");
        new S02();
    }
}

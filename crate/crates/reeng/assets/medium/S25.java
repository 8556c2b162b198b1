public class S25 extends Abstract1 {
    public void open() {
        new S07();
        send("msg2");
        log("trace");
    }

    public void close() {
        update();
        new S13();
        send("msg5");
    }

    public void start() {
        if (counter > 4) {
            new S26();
            new S09();
        } else {
            send("msg1");
            send("msg2");
            if (counter > 1) {
                new S16();
            } else {
                new S06();
                new Abstract3();
            }
        }
        send("msg5");
    }

    public void stop() {
        send("msg7");
    }

    public void tick() {
        new S29();
        send("msg1");
        switch (event) {
            case EV3:
                log("trace");
                if (counter > 4) {
                    log("trace");
                } else {
                    new S21();
                    send("msg3");
                    new S08();
                }
                break;
            case EV5:
                send("msg0");
                break;
            default:
                if (counter > 8) {
                    new S04();
                    new S19();
                    new S22();
                } else {
                    update();
                    send("msg1");
                    send("msg7");
                }
                break;
        }
    }
}

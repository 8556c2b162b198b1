public class S29 extends State {
    public void open() {
        try {
            send("msg7");
            new S09();
        } finally {
            new S23();
            send("msg4");
        }
        log("trace");
        if (counter > 3) {
            new S05();
        }
    }

    public void close() {
        new S11();
        try {
            update();
            log("trace");
        } finally {
            new S28();
            new S09();
        }
    }

    public void start() {
        switch (event) {
            case EV4:
                if (counter > 7) {
                    new S14();
                }
                if (counter > 9) {
                    new S21();
                    new S12();
                    new S12();
                }
                break;
            case EV3:
                send("msg6");
                new S03();
                break;
            case EV1:
                if (counter > 6) {
                    send("msg2");
                } else {
                    update();
                }
                break;
        }
        log("trace");
    }

    public void stop() {
        send("msg6");
    }

    public void tick() {
        send("msg2");
    }
}

public class S00 extends Abstract3 {
    public void open() {
        send("msg7");
    }

    public void close() {
        switch (event) {
            case EV4:
                if (counter > 5) {
                    new S29();
                    new S12();
                }
                if (counter > 3) {
                    send("msg0");
                    log("trace");
                }
                break;
            case EV2:
                send("msg6");
                new S06();
                break;
        }
        new S01();
    }

    public void start() {
        log("trace");
        new S09();
        send("msg1");
    }

    public void stop() {
        send("msg2");
        if (counter > 2) {
            send("msg2");
            new S12();
        } else {
            new S29();
        }
        new S13();
    }

    public void tick() {
        if (counter > 8) {
            new S00();
            try {
                update();
                send("msg4");
            } catch (TimeoutException e) {
                send("msg1");
                send("msg1");
                send("msg3");
            } finally {
                log("trace");
                new Abstract5();
            }
            if (counter > 9) {
                new S16();
                send("msg2");
                new S19();
            } else {
                send("msg2");
            }
        }
        if (counter > 4) {
            switch (event) {
                case EV0:
                    send("msg5");
                    break;
                case EV1:
                    log("trace");
                    send("msg2");
                    break;
            }
            try {
                new S25();
                new S19();
                send("msg7");
            } finally {
                send("msg1");
                log("trace");
            }
        } else {
            new S06();
        }
        send("msg2");
    }
}

public class S08 extends Abstract5 {
    public void open() {
        try {
            update();
            send("msg7");
        } finally {
            send("msg1");
            send("msg5");
            new S03();
        }
        new S10();
        new S10();
    }

    public void close() {
        if (counter > 2) {
            switch (event) {
                case EV5:
                    update();
                    log("trace");
                    send("msg1");
                    break;
                case EV4:
                    update();
                    send("msg5");
                    new S10();
                    break;
                case EV3:
                    log("trace");
                    new S26();
                    break;
            }
        }
    }

    public void start() {
        switch (event) {
            case EV1:
                update();
                if (counter > 7) {
                    send("msg7");
                    new S09();
                } else {
                    new Abstract3();
                    send("msg5");
                    send("msg0");
                }
                break;
            case EV3:
                if (counter > 0) {
                    send("msg3");
                    new S13();
                }
                new S22();
                new S18();
                break;
        }
    }

    public void stop() {
        update();
        send("msg2");
    }

    public void tick() {
        new S15();
        if (counter > 6) {
            update();
            new Helper();
        }
        if (counter > 6) {
            log("trace");
            try {
                send("msg6");
                new S16();
                new S21();
            } catch (IOException e) {
                new S03();
                update();
            }
            log("trace");
        } else {
            log("trace");
            send("msg1");
            switch (event) {
                case EV2:
                    log("trace");
                    new S21();
                    send("msg4");
                    break;
            }
        }
    }
}

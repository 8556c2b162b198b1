public class S01 extends Abstract6 {
    public void open() {
        switch (event) {
            case EV5:
                send("msg6");
                send("msg6");
                update();
                break;
            case EV1:
                log("trace");
                switch (event) {
                    case EV1:
                        send("msg3");
                        break;
                }
                break;
            case EV2:
                new S21();
                break;
        }
        log("trace");
    }

    public void close() {
        switch (event) {
            case EV4:
                send("msg4");
                new S22();
                break;
            case EV3:
                send("msg7");
                break;
        }
        send("msg3");
    }

    public void start() {
        switch (event) {
            case EV4:
                new S16();
                if (counter > 3) {
                    send("msg0");
                    update();
                    new S25();
                }
                break;
        }
    }

    public void stop() {
        log("trace");
        log("trace");
    }

    public void tick() {
        try {
            new S14();
            send("msg6");
            new S12();
        } catch (IOException e) {
            if (counter > 4) {
                send("msg2");
            } else {
                new S22();
                send("msg5");
            }
            new S26();
            try {
                update();
            } finally {
                update();
                send("msg6");
            }
        } finally {
            log("trace");
            new S13();
            send("msg7");
        }
        send("msg6");
    }
}

public class S24 extends State {
    public void open() {
        new S04();
        send("msg3");
    }

    public void close() {
        try {
            send("msg3");
            try {
                new S07();
            } catch (IOException e) {
                send("msg5");
                send("msg0");
            }
        } finally {
            send("msg4");
        }
        try {
            new S08();
            new S16();
            switch (event) {
                case EV3:
                    send("msg7");
                    break;
                case EV1:
                    log("trace");
                    new S15();
                    new S24();
                    break;
                case EV5:
                    send("msg7");
                    send("msg5");
                    break;
            }
        } finally {
            new S05();
            try {
                log("trace");
                update();
                send("msg7");
            } catch (IllegalStateException e) {
                send("msg3");
            }
            log("trace");
        }
    }

    public void start() {
        update();
    }

    public void stop() {
        new S04();
        try {
            switch (event) {
                case EV5:
                    new S07();
                    break;
            }
            if (counter > 9) {
                send("msg6");
                update();
                send("msg6");
            } else {
                new S00();
                update();
                new S17();
            }
        } catch (IOException e) {
            try {
                send("msg4");
            } finally {
                new S14();
                update();
                send("msg0");
            }
            new S14();
        } finally {
            switch (event) {
                case EV3:
                    send("msg7");
                    break;
                case EV1:
                    new S12();
                    log("trace");
                    update();
                    break;
            }
        }
    }

    public void tick() {
        send("msg4");
        send("msg2");
        try {
            new Abstract2();
            send("msg3");
        } catch (IllegalStateException e) {
            new S19();
        } catch (IOException e) {
            update();
            new S17();
            switch (event) {
                case EV2:
                    update();
                    send("msg0");
                    break;
            }
        }
    }
}

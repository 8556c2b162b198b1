public class S15 extends State {
    public void open() {
        switch (event) {
            case EV5:
                send("msg1");
                new S26();
                update();
                break;
        }
    }

    public void close() {
        if (counter > 3) {
            send("msg4");
            send("msg3");
        }
        send("msg7");
        send("msg4");
    }

    public void start() {
        update();
        send("msg5");
        if (counter > 4) {
            if (counter > 2) {
                new S28();
                new S10();
            } else {
                update();
                send("msg2");
            }
        } else {
            send("msg6");
            if (counter > 2) {
                send("msg4");
                send("msg2");
            } else {
                send("msg1");
            }
            if (counter > 1) {
                send("msg7");
            } else {
                new Abstract5();
                new S08();
                new S17();
            }
        }
    }

    public void stop() {
        try {
            try {
                new S27();
                send("msg3");
            } catch (IllegalStateException e) {
                log("trace");
                send("msg2");
                send("msg0");
            } catch (TimeoutException e) {
                send("msg2");
            }
        } catch (TimeoutException e) {
            send("msg4");
            send("msg6");
            new S15();
        }
    }

    public void tick() {
        if (counter > 3) {
            new S01();
            new S08();
            try {
                update();
                log("trace");
            } finally {
                send("msg0");
                update();
                log("trace");
            }
        }
        if (counter > 4) {
            new S07();
            switch (event) {
                case EV2:
                    send("msg4");
                    break;
                case EV4:
                    send("msg2");
                    break;
                case EV3:
                    send("msg2");
                    send("msg1");
                    new S11();
                    break;
            }
        } else {
            new S02();
            send("msg2");
        }
        new Abstract1();
    }
}

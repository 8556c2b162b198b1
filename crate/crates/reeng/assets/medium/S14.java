public class S14 extends Abstract2 {
    public void open() {
        send("msg7");
    }

    public void close() {
        new S03();
        switch (event) {
            case EV5:
                new Abstract3();
                break;
        }
    }

    public void start() {
        new S11();
    }

    public void stop() {
        if (counter > 2) {
            try {
                send("msg4");
                send("msg2");
                new S04();
            } catch (TimeoutException e) {
                send("msg4");
            } finally {
                log("trace");
                new S25();
                update();
            }
            send("msg7");
            switch (event) {
                case EV5:
                    new S12();
                    send("msg2");
                    break;
                case EV1:
                    send("msg2");
                    send("msg6");
                    break;
            }
        } else {
            switch (event) {
                case EV1:
                    send("msg2");
                    send("msg4");
                    break;
            }
            send("msg1");
        }
        update();
        update();
    }

    public void tick() {
        try {
            send("msg4");
            send("msg2");
        } catch (IllegalStateException e) {
            new S26();
            send("msg4");
            new S17();
        } catch (IOException e) {
            new S14();
            if (counter > 4) {
                new S13();
                new S21();
            }
        }
    }
}

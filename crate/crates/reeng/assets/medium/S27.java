public class S27 extends State {
    public void open() {
        new S29();
        if (counter > 0) {
            send("msg7");
            send("msg4");
        } else {
            send("msg2");
            send("msg5");
            send("msg7");
        }
        new S05();
    }

    public void close() {
        update();
    }

    public void start() {
        update();
    }

    public void stop() {
        send("msg2");
        if (counter > 4) {
            if (counter > 8) {
                new S05();
                new S17();
                new Abstract1();
            }
            send("msg6");
        }
    }

    public void tick() {
        try {
            new S00();
            switch (event) {
                case EV2:
                    new S23();
                    break;
            }
        } catch (IOException e) {
            send("msg4");
            switch (event) {
                case EV3:
                    new S16();
                    break;
                case EV5:
                    new S16();
                    new S06();
                    break;
            }
        } catch (IllegalStateException e) {
            update();
        }
    }
}

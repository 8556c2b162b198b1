public class S20 extends Abstract1 {
    public void open() {
        if (counter > 5) {
            send("msg3");
            new S09();
        } else {
            new S22();
            send("msg6");
        }
    }

    public void close() {
        new S26();
        send("msg2");
        new S00();
    }

    public void start() {
        try {
            switch (event) {
                case EV5:
                    send("msg0");
                    update();
                    break;
            }
            send("msg2");
            send("msg6");
        } catch (IllegalStateException e) {
            new S19();
            new S21();
            switch (event) {
                case EV2:
                    new S00();
                    send("msg7");
                    break;
                case EV3:
                    update();
                    update();
                    new S21();
                    break;
                case EV1:
                    new S00();
                    break;
            }
        } catch (IOException e) {
            send("msg3");
        }
        send("msg7");
    }

    public void stop() {
        new S29();
        new S18();
    }

    public void tick() {
        send("msg0");
    }
}

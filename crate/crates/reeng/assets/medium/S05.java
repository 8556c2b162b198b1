public class S05 extends State {
    public void open() {
        new S23();
        send("msg2");
        switch (event) {
            case EV5:
                switch (event) {
                    case EV2:
                        send("msg5");
                        update();
                        log("trace");
                        break;
                }
                new Abstract1();
                break;
            case EV3:
                send("msg7");
                try {
                    send("msg0");
                    new S07();
                } catch (IOException e) {
                    new S04();
                }
                break;
        }
    }

    public void close() {
        send("msg2");
    }

    public void start() {
        send("msg6");
        send("msg0");
    }

    public void stop() {
        new S08();
    }

    public void tick() {
        send("msg4");
        new S25();
        send("msg7");
    }
}

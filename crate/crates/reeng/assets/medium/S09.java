public class S09 extends State {
    public void open() {
        log("trace");
    }

    public void close() {
        new S10();
    }

    public void start() {
        log("trace");
        send("msg2");
        update();
    }

    public void stop() {
        switch (event) {
            case EV2:
                send("msg0");
                update();
                if (counter > 4) {
                    send("msg6");
                    new S04();
                }
                break;
            default:
                log("trace");
                switch (event) {
                    case EV3:
                        new S13();
                        break;
                    case EV5:
                        new S07();
                        new S09();
                        break;
                    case EV4:
                        update();
                        new S25();
                        break;
                }
                break;
        }
        log("trace");
        switch (event) {
            case EV2:
                update();
                new Abstract1();
                break;
            case EV0:
                try {
                    new S08();
                } catch (TimeoutException e) {
                    send("msg6");
                }
                break;
            default:
                new S24();
                send("msg5");
                log("trace");
                break;
        }
    }

    public void tick() {
        new S16();
        send("msg7");
    }
}

public class S034 extends State {
    public void open() {
        send("msg7");
        new S007();
    }

    public void close() {
        try {
            update();
            switch (event) {
                case EV1:
                    switch (event) {
                        case EV0:
                            log("trace");
                            send("msg2");
                            new S027();
                            break;
                        case EV3:
                            send("msg0");
                            new S059();
                            break;
                        case EV5:
                            send("msg1");
                            new S087();
                            new S006();
                            break;
                    }
                    break;
            }
        } finally {
            log("trace");
            new S013();
        }
    }

    public void start() {
        log("trace");
        new S067();
    }

    public void stop() {
        update();
    }

    public void tick() {
        if (counter > 5) {
            new S005();
        }
        send("msg4");
    }

    public void reset() {
        send("msg2");
        update();
    }

    public void pause() {
        send("msg4");
        new S013();
    }

    public void resume() {
        update();
        new S026();
        try {
            try {
                send("msg2");
                new S080();
                update();
            } catch (IOException e) {
                send("msg4");
                new S067();
                new S024();
            } catch (TimeoutException e) {
                log("trace");
                send("msg0");
            } finally {
                new S004();
            }
        } finally {
            send("msg6");
        }
    }

    public void load() {
        new S002();
        log("trace");
    }

    public void save() {
        send("msg1");
    }
}

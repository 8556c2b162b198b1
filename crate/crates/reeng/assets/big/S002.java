public class S002 extends Abstract2 {
    public void open() {
        switch (event) {
            case EV3:
                new S081();
                send("msg4");
                break;
        }
    }

    public void close() {
        new S033();
        new S003();
    }

    public void start() {
        send("msg4");
        update();
        new Abstract17();
    }

    public void stop() {
        send("msg5");
        send("msg1");
    }

    public void tick() {
        send("msg6");
    }

    public void reset() {
        send("msg6");
    }

    public void pause() {
        new S018();
        send("msg5");
        new S094();
    }

    public void resume() {
        if (counter > 4) {
            new S091();
            switch (event) {
                case EV1:
                    try {
                        send("msg7");
                        update();
                        send("msg7");
                    } catch (TimeoutException e) {
                        send("msg3");
                        new S041();
                        update();
                    } finally {
                        send("msg0");
                        send("msg1");
                        send("msg4");
                    }
                    new S097();
                    log("trace");
                    break;
            }
            new S060();
        }
        log("trace");
    }

    public void load() {
        new Abstract13();
    }

    public void save() {
        try {
            send("msg0");
        } finally {
            update();
        }
    }
}

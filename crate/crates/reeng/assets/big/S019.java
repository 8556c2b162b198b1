public class S019 extends State {
    public void open() {
        send("msg3");
        new S052();
    }

    public void close() {
        new S083();
        try {
            new S097();
            new S011();
            update();
        } catch (IOException e) {
            send("msg6");
            new Abstract10();
            new S058();
        }
        if (counter > 5) {
            send("msg7");
            send("msg0");
        }
    }

    public void start() {
        new S086();
        new S021();
    }

    public void stop() {
        try {
            send("msg2");
            send("msg4");
            new S090();
        } catch (IllegalStateException e) {
            new S087();
            update();
            update();
        } finally {
            new S011();
            send("msg6");
            log("trace");
        }
        send("msg7");
        if (counter > 9) {
            new S077();
            new S001();
            switch (event) {
                case EV3:
                    log("trace");
                    break;
                case EV1:
                    send("msg1");
                    new S074();
                    send("msg6");
                    break;
                case EV5:
                    switch (event) {
                        case EV0:
                            send("msg2");
                            break;
                        case EV3:
                            new S055();
                            log("trace");
                            break;
                        case EV5:
                            new S015();
                            break;
                    }
                    send("msg6");
                    break;
            }
        }
    }

    public void tick() {
        if (counter > 8) {
            new S057();
            send("msg3");
        }
    }

    public void reset() {
        log("trace");
    }

    public void pause() {
        send("msg3");
        new S018();
        new S049();
    }

    public void resume() {
        new S064();
    }

    public void load() {
        send("msg3");
        send("msg2");
    }

    public void save() {
        send("msg4");
        update();
    }
}

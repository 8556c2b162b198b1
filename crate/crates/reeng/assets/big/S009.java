public class S009 extends State {
    public void open() {
        new S088();
        send("msg6");
    }

    public void close() {
        new S068();
        send("msg4");
        send("msg5");
    }

    public void start() {
        new S086();
    }

    public void stop() {
        new S025();
        try {
            new S074();
            new S068();
            new S062();
        } catch (IOException e) {
            send("msg2");
            new S036();
            new S057();
        }
    }

    public void tick() {
        new S045();
        new S097();
    }

    public void reset() {
        new S071();
        new S016();
    }

    public void pause() {
        new S073();
        send("msg6");
        new S029();
    }

    public void resume() {
        new S096();
    }

    public void load() {
        send("msg1");
        if (counter > 8) {
            switch (event) {
                case EV3:
                    log("trace");
                    break;
                case EV5:
                    send("msg1");
                    update();
                    break;
                default:
                    new Abstract5();
                    new S088();
                    if (counter > 1) {
                        log("trace");
                    } else {
                        send("msg0");
                        update();
                        new S065();
                    }
                    break;
            }
        }
        send("msg6");
    }

    public void save() {
        switch (event) {
            case EV5:
                if (counter > 7) {
                    send("msg2");
                    send("msg3");
                    try {
                        send("msg3");
                    } catch (TimeoutException e) {
                        update();
                        log("trace");
                        new S092();
                    } finally {
                        new S085();
                    }
                } else {
                    send("msg3");
                    update();
                    new S091();
                }
                break;
            case EV4:
                send("msg3");
                break;
        }
    }
}

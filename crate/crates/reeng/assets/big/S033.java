public class S033 extends State {
    public void open() {
        try {
            switch (event) {
                case EV3:
                    update();
                    new S081();
                    break;
                case EV1:
                    send("msg1");
                    send("msg2");
                    break;
                case EV2:
                    new S031();
                    log("trace");
                    break;
            }
            new S043();
            new S056();
        } finally {
            try {
                try {
                    send("msg2");
                    new S040();
                } catch (IllegalStateException e) {
                    send("msg7");
                    new S087();
                }
                new S001();
                send("msg1");
            } catch (IOException e) {
                new S088();
                new S073();
                send("msg6");
            }
        }
    }

    public void close() {
        send("msg5");
        new S087();
    }

    public void start() {
        send("msg0");
        send("msg5");
        new S019();
    }

    public void stop() {
        switch (event) {
            case EV2:
                new S074();
                break;
            case EV3:
                update();
                break;
            case EV0:
                log("trace");
                log("trace");
                break;
        }
    }

    public void tick() {
        log("trace");
        send("msg5");
        send("msg6");
    }

    public void reset() {
        send("msg0");
    }

    public void pause() {
        send("msg0");
    }

    public void resume() {
        switch (event) {
            case EV1:
                switch (event) {
                    case EV4:
                        send("msg0");
                        break;
                    case EV3:
                        log("trace");
                        new S074();
                        send("msg1");
                        break;
                }
                send("msg7");
                send("msg1");
                break;
            case EV4:
                send("msg7");
                send("msg0");
                break;
        }
        send("msg7");
    }

    public void load() {
        send("msg6");
        try {
            new S099();
            if (counter > 8) {
                if (counter > 0) {
                    send("msg7");
                } else {
                    send("msg5");
                    send("msg5");
                    new S017();
                }
                new S073();
                if (counter > 1) {
                    new S010();
                    new Helper();
                    new S017();
                }
            }
            switch (event) {
                case EV4:
                    send("msg7");
                    new S072();
                    new S080();
                    break;
                case EV1:
                    new S072();
                    send("msg2");
                    log("trace");
                    break;
                case EV0:
                    switch (event) {
                        case EV3:
                            new S056();
                            break;
                        case EV1:
                            new S013();
                            break;
                    }
                    send("msg2");
                    send("msg7");
                    break;
            }
        } catch (IllegalStateException e) {
            new S090();
        } finally {
            try {
                switch (event) {
                    case EV5:
                        send("msg4");
                        break;
                }
                new S078();
                if (counter > 2) {
                    send("msg0");
                    new S094();
                    new S059();
                }
            } finally {
                send("msg7");
                new S097();
            }
            new S068();
        }
    }

    public void save() {
        new S068();
        send("msg1");
    }
}

public class S014 extends Abstract5 {
    public void open() {
        send("msg3");
    }

    public void close() {
        if (counter > 9) {
            try {
                send("msg0");
            } catch (IllegalStateException e) {
                new S000();
                update();
            } catch (TimeoutException e) {
                new S062();
                if (counter > 1) {
                    send("msg5");
                }
            } finally {
                send("msg5");
            }
            new S000();
            if (counter > 4) {
                send("msg1");
                new S007();
                new S005();
            } else {
                send("msg4");
            }
        }
        send("msg1");
    }

    public void start() {
        switch (event) {
            case EV1:
                switch (event) {
                    case EV3:
                        send("msg6");
                        break;
                    case EV0:
                        new S055();
                        new S046();
                        break;
                    case EV1:
                        new S094();
                        break;
                }
                if (counter > 4) {
                    if (counter > 5) {
                        send("msg5");
                        send("msg1");
                        log("trace");
                    } else {
                        update();
                        new S034();
                        send("msg7");
                    }
                    send("msg0");
                    send("msg5");
                } else {
                    new S084();
                }
                break;
            case EV0:
                send("msg3");
                break;
        }
        try {
            try {
                switch (event) {
                    case EV0:
                        new S070();
                        break;
                }
                update();
                new S012();
            } catch (TimeoutException e) {
                new Abstract22();
            }
        } catch (IOException e) {
            send("msg3");
        }
    }

    public void stop() {
        send("msg3");
        send("msg5");
    }

    public void tick() {
        send("msg6");
        new S039();
    }

    public void reset() {
        new S093();
        log("trace");
    }

    public void pause() {
        new S026();
        log("trace");
    }

    public void resume() {
        switch (event) {
            case EV5:
                log("trace");
                break;
            case EV2:
                if (counter > 1) {
                    send("msg7");
                    send("msg4");
                    try {
                        new Abstract21();
                        log("trace");
                    } finally {
                        log("trace");
                        new S007();
                    }
                } else {
                    update();
                    if (counter > 4) {
                        log("trace");
                        send("msg2");
                        update();
                    }
                }
                new S073();
                break;
        }
    }

    public void load() {
        new S034();
        send("msg6");
        try {
            send("msg4");
        } catch (IOException e) {
            new S051();
            new Abstract19();
            send("msg3");
        }
    }

    public void save() {
        switch (event) {
            case EV0:
                if (counter > 8) {
                    switch (event) {
                        case EV0:
                            new S047();
                            send("msg4");
                            send("msg5");
                            break;
                        case EV3:
                            new S059();
                            break;
                    }
                } else {
                    try {
                        send("msg4");
                    } finally {
                        send("msg6");
                    }
                }
                break;
        }
    }
}

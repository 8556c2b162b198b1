public class S094 extends Abstract19 {
    public void open() {
        if (counter > 5) {
            try {
                try {
                    send("msg6");
                    new S020();
                    send("msg6");
                } finally {
                    send("msg6");
                    new S059();
                }
            } catch (TimeoutException e) {
                switch (event) {
                    case EV4:
                        new S092();
                        send("msg2");
                        log("trace");
                        break;
                    default:
                        new S027();
                        update();
                        update();
                        break;
                }
                if (counter > 2) {
                    new S026();
                } else {
                    send("msg7");
                    new S058();
                }
                try {
                    send("msg2");
                    send("msg3");
                } finally {
                    new S028();
                    send("msg0");
                }
            } finally {
                new S092();
                new S039();
                send("msg1");
            }
            switch (event) {
                case EV0:
                    send("msg4");
                    send("msg6");
                    break;
                case EV3:
                    try {
                        new S006();
                        send("msg5");
                    } finally {
                        send("msg6");
                        send("msg7");
                        new S003();
                    }
                    send("msg3");
                    break;
            }
            send("msg3");
        } else {
            try {
                switch (event) {
                    case EV4:
                        update();
                        new S050();
                        update();
                        break;
                }
                switch (event) {
                    case EV4:
                        new S093();
                        send("msg5");
                        new S067();
                        break;
                }
                update();
            } catch (TimeoutException e) {
                new S016();
                send("msg0");
            } catch (IllegalStateException e) {
                send("msg2");
                update();
            }
        }
    }

    public void close() {
        log("trace");
        new S001();
        send("msg4");
    }

    public void start() {
        new Abstract1();
        try {
            try {
                send("msg4");
                switch (event) {
                    case EV1:
                        log("trace");
                        send("msg4");
                        new S009();
                        break;
                    case EV0:
                        new S024();
                        break;
                }
            } finally {
                new S034();
                if (counter > 3) {
                    send("msg5");
                    new S088();
                    new S021();
                }
            }
        } finally {
            if (counter > 9) {
                if (counter > 6) {
                    new S037();
                } else {
                    send("msg1");
                }
                new S040();
                switch (event) {
                    case EV2:
                        log("trace");
                        send("msg6");
                        new Abstract3();
                        break;
                    case EV5:
                        log("trace");
                        break;
                    case EV1:
                        send("msg2");
                        new S061();
                        break;
                }
            } else {
                send("msg6");
            }
            new S029();
            send("msg2");
        }
    }

    public void stop() {
        new S048();
        if (counter > 5) {
            new S020();
        }
    }

    public void tick() {
        update();
        new S068();
    }

    public void reset() {
        new S037();
    }

    public void pause() {
        update();
        switch (event) {
            case EV1:
                send("msg7");
                send("msg1");
                break;
            case EV5:
                try {
                    if (counter > 3) {
                        log("trace");
                        new S058();
                        update();
                    } else {
                        new S041();
                        new S039();
                        new S097();
                    }
                } catch (TimeoutException e) {
                    new S055();
                }
                log("trace");
                break;
            case EV2:
                if (counter > 2) {
                    try {
                        new S027();
                        log("trace");
                    } catch (TimeoutException e) {
                        send("msg5");
                        send("msg4");
                    } catch (IllegalStateException e) {
                        send("msg5");
                    } finally {
                        send("msg0");
                        new S060();
                        send("msg1");
                    }
                    send("msg7");
                } else {
                    new S049();
                }
                break;
            default:
                send("msg4");
                break;
        }
    }

    public void resume() {
        send("msg5");
    }

    public void load() {
        send("msg1");
        log("trace");
    }

    public void save() {
        send("msg2");
    }
}

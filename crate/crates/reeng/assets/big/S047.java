public class S047 extends State {
    public void open() {
        try {
            send("msg3");
            send("msg1");
            log("trace");
        } catch (IllegalStateException e) {
            new S027();
        } catch (TimeoutException e) {
            new S033();
            log("trace");
            try {
                log("trace");
            } catch (TimeoutException e) {
                new S036();
                send("msg4");
                try {
                    send("msg1");
                    new S099();
                } finally {
                    new S042();
                }
            }
        }
        send("msg0");
    }

    public void close() {
        switch (event) {
            case EV4:
                send("msg4");
                break;
        }
    }

    public void start() {
        new S094();
        log("trace");
    }

    public void stop() {
        update();
    }

    public void tick() {
        send("msg6");
        try {
            if (counter > 8) {
                new S041();
                switch (event) {
                    case EV4:
                        new S066();
                        send("msg6");
                        new S074();
                        break;
                    case EV1:
                        send("msg0");
                        break;
                }
            }
            send("msg5");
            if (counter > 4) {
                if (counter > 2) {
                    update();
                    new S006();
                }
                new S027();
                new Abstract7();
            } else {
                send("msg1");
                send("msg7");
                send("msg3");
            }
        } finally {
            if (counter > 5) {
                send("msg2");
            }
        }
    }

    public void reset() {
        send("msg2");
        try {
            new S058();
            if (counter > 4) {
                switch (event) {
                    case EV3:
                        update();
                        break;
                    case EV0:
                        new S003();
                        send("msg3");
                        break;
                    default:
                        send("msg7");
                        send("msg2");
                        new S069();
                        break;
                }
            } else {
                new S008();
                new S018();
                new S063();
            }
            send("msg3");
        } finally {
            log("trace");
            switch (event) {
                case EV4:
                    send("msg7");
                    break;
                case EV2:
                    send("msg5");
                    try {
                        new S085();
                        new S024();
                    } finally {
                        new S074();
                        log("trace");
                        new S062();
                    }
                    send("msg3");
                    break;
                case EV3:
                    send("msg4");
                    break;
            }
        }
        send("msg6");
    }

    public void pause() {
        new S096();
        new S028();
        if (counter > 7) {
            send("msg2");
            send("msg2");
        }
    }

    public void resume() {
        send("msg1");
        new S073();
    }

    public void load() {
        switch (event) {
            case EV3:
                try {
                    new S006();
                    try {
                        new S001();
                    } catch (IllegalStateException e) {
                        new S076();
                    } catch (TimeoutException e) {
                        send("msg7");
                    } finally {
                        new Abstract2();
                    }
                } finally {
                    send("msg2");
                    try {
                        send("msg6");
                        log("trace");
                    } catch (IOException e) {
                        send("msg7");
                        new S083();
                    }
                    log("trace");
                }
                break;
        }
        send("msg7");
    }

    public void save() {
        new Abstract3();
        update();
        log("trace");
    }
}

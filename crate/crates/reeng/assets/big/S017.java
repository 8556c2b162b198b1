public class S017 extends State {
    public void open() {
        send("msg4");
        send("msg1");
        new S052();
    }

    public void close() {
        try {
            try {
                send("msg7");
            } catch (IllegalStateException e) {
                try {
                    new S059();
                } finally {
                    new S076();
                }
            } catch (IOException e) {
                if (counter > 4) {
                    send("msg6");
                    send("msg0");
                    new S080();
                } else {
                    new S046();
                }
                new S045();
            }
        } finally {
            new S059();
            if (counter > 3) {
                new S006();
                update();
            }
            switch (event) {
                case EV3:
                    switch (event) {
                        case EV3:
                            new S089();
                            send("msg4");
                            break;
                        case EV1:
                            new S014();
                            break;
                        case EV0:
                            send("msg2");
                            new S024();
                            break;
                    }
                    if (counter > 0) {
                        send("msg1");
                    }
                    log("trace");
                    break;
                case EV2:
                    switch (event) {
                        case EV2:
                            log("trace");
                            break;
                    }
                    new S066();
                    send("msg4");
                    break;
            }
        }
        new S033();
    }

    public void start() {
        new S061();
    }

    public void stop() {
        send("msg5");
    }

    public void tick() {
        new S072();
        switch (event) {
            case EV1:
                send("msg6");
                break;
            case EV5:
                send("msg7");
                send("msg1");
                break;
            case EV0:
                new S038();
                log("trace");
                break;
        }
    }

    public void reset() {
        new S050();
        new S037();
        new S072();
    }

    public void pause() {
        new S085();
        if (counter > 0) {
            if (counter > 3) {
                send("msg2");
                new S072();
                send("msg0");
            }
            update();
        } else {
            new S016();
        }
    }

    public void resume() {
        if (counter > 0) {
            new S036();
            send("msg1");
        } else {
            new S015();
            log("trace");
        }
        new S065();
    }

    public void load() {
        send("msg2");
        new S012();
    }

    public void save() {
        switch (event) {
            case EV4:
                new S089();
                try {
                    send("msg7");
                    try {
                        send("msg4");
                        send("msg5");
                        send("msg4");
                    } catch (IllegalStateException e) {
                        new S073();
                        send("msg2");
                    }
                    if (counter > 5) {
                        send("msg0");
                        send("msg0");
                    }
                } catch (IOException e) {
                    send("msg3");
                    send("msg1");
                    send("msg7");
                } finally {
                    log("trace");
                    if (counter > 6) {
                        new S074();
                        log("trace");
                        send("msg1");
                    } else {
                        new S080();
                    }
                    switch (event) {
                        case EV0:
                            new S082();
                            log("trace");
                            break;
                        case EV2:
                            new S075();
                            new S064();
                            break;
                        case EV5:
                            update();
                            send("msg7");
                            send("msg6");
                            break;
                    }
                }
                send("msg0");
                break;
            case EV2:
                send("msg1");
                try {
                    send("msg0");
                    try {
                        new S028();
                        log("trace");
                    } finally {
                        send("msg1");
                        new S047();
                        send("msg1");
                    }
                } catch (IOException e) {
                    send("msg0");
                    new S040();
                } finally {
                    new S090();
                }
                break;
            case EV1:
                try {
                    send("msg5");
                } catch (TimeoutException e) {
                    update();
                    update();
                } catch (IllegalStateException e) {
                    new S019();
                } finally {
                    if (counter > 4) {
                        new S003();
                        new S055();
                    } else {
                        new S019();
                    }
                    send("msg2");
                }
                new S048();
                new S062();
                break;
        }
        log("trace");
    }
}

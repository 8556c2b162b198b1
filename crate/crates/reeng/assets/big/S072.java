public class S072 extends State {
    public void open() {
        new S062();
        update();
    }

    public void close() {
        if (counter > 7) {
            log("trace");
            send("msg7");
        }
    }

    public void start() {
        new S068();
        try {
            new S019();
        } finally {
            switch (event) {
                case EV4:
                    new S087();
                    break;
                case EV2:
                    send("msg3");
                    send("msg5");
                    send("msg6");
                    break;
                case EV1:
                    new S099();
                    break;
            }
        }
    }

    public void stop() {
        update();
        switch (event) {
            case EV1:
                new S048();
                send("msg1");
                break;
        }
        try {
            log("trace");
            new S088();
        } catch (TimeoutException e) {
            switch (event) {
                case EV0:
                    try {
                        send("msg7");
                        send("msg6");
                        send("msg3");
                    } catch (IllegalStateException e) {
                        log("trace");
                        new S038();
                    } finally {
                        update();
                    }
                    send("msg5");
                    try {
                        send("msg0");
                    } finally {
                        send("msg2");
                        log("trace");
                        log("trace");
                    }
                    break;
            }
            update();
        } catch (IllegalStateException e) {
            new S050();
            update();
            send("msg1");
        } finally {
            send("msg1");
        }
    }

    public void tick() {
        send("msg2");
    }

    public void reset() {
        new S060();
    }

    public void pause() {
        update();
        send("msg6");
        send("msg4");
    }

    public void resume() {
        send("msg6");
        new S033();
        switch (event) {
            case EV1:
                switch (event) {
                    case EV1:
                        log("trace");
                        send("msg5");
                        try {
                            log("trace");
                            update();
                        } catch (IOException e) {
                            new S076();
                            send("msg0");
                        } catch (TimeoutException e) {
                            send("msg1");
                            new S012();
                            send("msg6");
                        }
                        break;
                    default:
                        try {
                            new S010();
                            send("msg6");
                        } finally {
                            send("msg7");
                            send("msg7");
                        }
                        new S040();
                        break;
                }
                break;
        }
    }

    public void load() {
        switch (event) {
            case EV0:
                send("msg4");
                send("msg1");
                new S002();
                break;
        }
        if (counter > 5) {
            switch (event) {
                case EV2:
                    if (counter > 6) {
                        new S084();
                    }
                    send("msg2");
                    break;
                case EV0:
                    try {
                        send("msg2");
                        send("msg5");
                    } catch (IOException e) {
                        send("msg0");
                        new S063();
                        log("trace");
                    }
                    break;
            }
            new S046();
        }
        try {
            send("msg4");
            update();
        } catch (TimeoutException e) {
            switch (event) {
                case EV5:
                    new S094();
                    log("trace");
                    break;
            }
            new S065();
        } finally {
            if (counter > 4) {
                new S059();
                new Abstract9();
                new S047();
            }
            if (counter > 2) {
                send("msg2");
                try {
                    update();
                    log("trace");
                    send("msg4");
                } finally {
                    new S036();
                    new S010();
                    send("msg5");
                }
                log("trace");
            }
        }
    }

    public void save() {
        send("msg2");
        if (counter > 6) {
            new S008();
        }
        if (counter > 2) {
            try {
                if (counter > 9) {
                    new S065();
                    send("msg2");
                } else {
                    send("msg0");
                    send("msg4");
                    new S080();
                }
            } catch (TimeoutException e) {
                log("trace");
                new S023();
            }
        }
    }
}

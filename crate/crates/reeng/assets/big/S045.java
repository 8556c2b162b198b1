public class S045 extends State {
    public void open() {
        try {
            new S012();
            new Abstract8();
            new S092();
        } catch (IllegalStateException e) {
            send("msg6");
        } catch (IOException e) {
            new S006();
        }
        switch (event) {
            case EV4:
                if (counter > 9) {
                    switch (event) {
                        case EV0:
                            new S099();
                            send("msg0");
                            break;
                        case EV2:
                            new S076();
                            send("msg0");
                            break;
                        case EV5:
                            update();
                            break;
                        default:
                            log("trace");
                            new Abstract7();
                            send("msg3");
                            break;
                    }
                    new S083();
                }
                break;
        }
    }

    public void close() {
        send("msg5");
        new S094();
    }

    public void start() {
        try {
            new S074();
            new Abstract17();
            try {
                log("trace");
                send("msg3");
                new S017();
            } catch (TimeoutException e) {
                send("msg6");
            }
        } catch (IllegalStateException e) {
            log("trace");
            send("msg2");
            if (counter > 9) {
                send("msg6");
                if (counter > 2) {
                    log("trace");
                    log("trace");
                    update();
                }
            }
        } finally {
            send("msg1");
        }
        switch (event) {
            case EV4:
                new S046();
                new S066();
                log("trace");
                break;
            case EV3:
                new S043();
                send("msg0");
                new S032();
                break;
            case EV1:
                new S085();
                break;
        }
        switch (event) {
            case EV4:
                if (counter > 0) {
                    new Helper();
                } else {
                    send("msg7");
                }
                break;
            case EV2:
                send("msg3");
                send("msg5");
                update();
                break;
        }
    }

    public void stop() {
        new S037();
    }

    public void tick() {
        try {
            send("msg2");
            new S014();
            send("msg2");
        } finally {
            new S008();
            new S015();
        }
        new S076();
    }

    public void reset() {
        new S050();
    }

    public void pause() {
        send("msg0");
        log("trace");
    }

    public void resume() {
        send("msg0");
    }

    public void load() {
        switch (event) {
            case EV3:
                send("msg2");
                try {
                    update();
                } catch (TimeoutException e) {
                    switch (event) {
                        case EV1:
                            new S054();
                            break;
                        case EV4:
                            new S075();
                            send("msg7");
                            new S035();
                            break;
                        case EV2:
                            new Abstract6();
                            break;
                    }
                    try {
                        new S057();
                        new S052();
                    } catch (TimeoutException e) {
                        send("msg5");
                        send("msg6");
                    }
                    send("msg1");
                } catch (IllegalStateException e) {
                    new S006();
                    send("msg0");
                }
                break;
            case EV0:
                try {
                    send("msg4");
                } catch (IllegalStateException e) {
                    send("msg2");
                } catch (IOException e) {
                    try {
                        new S055();
                        send("msg2");
                    } finally {
                        send("msg5");
                        send("msg4");
                        new S089();
                    }
                }
                break;
            case EV5:
                switch (event) {
                    case EV4:
                        update();
                        break;
                }
                send("msg6");
                break;
        }
        new S025();
    }

    public void save() {
        switch (event) {
            case EV5:
                send("msg2");
                switch (event) {
                    case EV2:
                        new S062();
                        if (counter > 6) {
                            update();
                            send("msg7");
                        } else {
                            send("msg4");
                        }
                        break;
                    case EV4:
                        send("msg1");
                        break;
                }
                new S023();
                break;
            case EV1:
                update();
                break;
            case EV2:
                switch (event) {
                    case EV0:
                        log("trace");
                        break;
                }
                try {
                    switch (event) {
                        case EV1:
                            new S026();
                            log("trace");
                            break;
                        case EV2:
                            send("msg2");
                            new S008();
                            break;
                    }
                    send("msg5");
                    try {
                        log("trace");
                        update();
                        log("trace");
                    } finally {
                        send("msg7");
                        send("msg1");
                    }
                } catch (IOException e) {
                    send("msg7");
                } finally {
                    try {
                        new S013();
                        send("msg6");
                        send("msg4");
                    } finally {
                        new S003();
                    }
                    try {
                        send("msg5");
                        log("trace");
                    } catch (TimeoutException e) {
                        update();
                        update();
                    } catch (IOException e) {
                        new S093();
                        send("msg7");
                    } finally {
                        send("msg2");
                        new S049();
                    }
                }
                break;
        }
        new S091();
    }
}

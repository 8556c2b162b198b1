public class S068 extends State {
    public void open() {
        new S064();
        send("msg2");
        if (counter > 5) {
            new S056();
            send("msg2");
        } else {
            send("msg6");
        }
    }

    public void close() {
        new S042();
        update();
        log("trace");
    }

    public void start() {
        switch (event) {
            case EV0:
                try {
                    send("msg5");
                    new S019();
                    send("msg1");
                } catch (IllegalStateException e) {
                    switch (event) {
                        case EV2:
                            send("msg0");
                            send("msg7");
                            break;
                    }
                    switch (event) {
                        case EV1:
                            new S046();
                            new S038();
                            new S014();
                            break;
                        case EV3:
                            send("msg5");
                            break;
                        case EV0:
                            log("trace");
                            break;
                    }
                }
                break;
            case EV3:
                send("msg0");
                break;
        }
        send("msg0");
    }

    public void stop() {
        send("msg5");
    }

    public void tick() {
        new S078();
        update();
    }

    public void reset() {
        new S006();
    }

    public void pause() {
        update();
        new S051();
        switch (event) {
            case EV2:
                if (counter > 7) {
                    new Abstract10();
                    switch (event) {
                        case EV4:
                            send("msg0");
                            break;
                    }
                    if (counter > 4) {
                        log("trace");
                        send("msg1");
                        send("msg4");
                    }
                }
                if (counter > 0) {
                    send("msg5");
                } else {
                    new Abstract3();
                    switch (event) {
                        case EV0:
                            send("msg4");
                            break;
                        case EV3:
                            new S042();
                            new Abstract16();
                            break;
                        case EV5:
                            new S062();
                            break;
                    }
                }
                send("msg6");
                break;
        }
    }

    public void resume() {
        switch (event) {
            case EV4:
                send("msg5");
                break;
            case EV3:
                switch (event) {
                    case EV3:
                        if (counter > 6) {
                            update();
                            send("msg7");
                        } else {
                            update();
                            new S099();
                        }
                        send("msg2");
                        break;
                    case EV1:
                        send("msg6");
                        break;
                    case EV2:
                        try {
                            send("msg2");
                            send("msg1");
                        } catch (TimeoutException e) {
                            new S032();
                            send("msg5");
                        } catch (IOException e) {
                            log("trace");
                        }
                        send("msg5");
                        switch (event) {
                            case EV4:
                                send("msg0");
                                send("msg4");
                                break;
                            case EV2:
                                send("msg7");
                                break;
                            case EV0:
                                send("msg3");
                                break;
                        }
                        break;
                    default:
                        update();
                        break;
                }
                break;
            case EV2:
                new Helper();
                try {
                    new S007();
                    send("msg3");
                } catch (TimeoutException e) {
                    new S070();
                    switch (event) {
                        case EV1:
                            send("msg3");
                            send("msg1");
                            send("msg5");
                            break;
                    }
                    if (counter > 8) {
                        new S004();
                    } else {
                        new S029();
                    }
                }
                break;
        }
        switch (event) {
            case EV4:
                send("msg4");
                switch (event) {
                    case EV1:
                        if (counter > 9) {
                            send("msg5");
                            new S056();
                            send("msg3");
                        }
                        new S095();
                        update();
                        break;
                    case EV5:
                        new S034();
                        switch (event) {
                            case EV0:
                                new S091();
                                new S066();
                                send("msg7");
                                break;
                            case EV2:
                                send("msg7");
                                send("msg2");
                                break;
                            case EV3:
                                new S069();
                                new Abstract2();
                                send("msg2");
                                break;
                        }
                        if (counter > 5) {
                            send("msg2");
                            send("msg0");
                            update();
                        } else {
                            send("msg2");
                        }
                        break;
                }
                update();
                break;
        }
        if (counter > 0) {
            send("msg3");
        } else {
            log("trace");
            send("msg4");
            try {
                try {
                    update();
                } catch (IOException e) {
                    send("msg1");
                    log("trace");
                    send("msg1");
                } catch (IllegalStateException e) {
                    new S019();
                    log("trace");
                    new S046();
                }
                new S041();
                if (counter > 5) {
                    send("msg3");
                    send("msg3");
                    send("msg0");
                } else {
                    new S046();
                    new S008();
                }
            } catch (IOException e) {
                switch (event) {
                    case EV5:
                        send("msg3");
                        break;
                }
                send("msg1");
            } finally {
                switch (event) {
                    case EV5:
                        send("msg0");
                        break;
                    case EV2:
                        log("trace");
                        break;
                }
                if (counter > 6) {
                    new S042();
                    log("trace");
                } else {
                    send("msg7");
                }
            }
        }
    }

    public void load() {
        new S069();
    }

    public void save() {
        new S090();
        new S089();
    }
}

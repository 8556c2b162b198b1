public class S070 extends Abstract24 {
    public void open() {
        switch (event) {
            case EV1:
                switch (event) {
                    case EV3:
                        log("trace");
                        new S078();
                        new S027();
                        break;
                    case EV1:
                        new Abstract19();
                        send("msg7");
                        break;
                }
                new S066();
                try {
                    log("trace");
                    send("msg4");
                } finally {
                    if (counter > 3) {
                        send("msg4");
                        send("msg0");
                        new S005();
                    } else {
                        update();
                        new S033();
                        new S089();
                    }
                    new S098();
                    if (counter > 4) {
                        new S056();
                        send("msg7");
                    }
                }
                break;
            case EV4:
                try {
                    new S024();
                } catch (TimeoutException e) {
                    new S055();
                    new S095();
                }
                if (counter > 3) {
                    switch (event) {
                        case EV2:
                            new S059();
                            send("msg2");
                            new S056();
                            break;
                        case EV5:
                            log("trace");
                            send("msg3");
                            log("trace");
                            break;
                    }
                    switch (event) {
                        case EV0:
                            log("trace");
                            send("msg6");
                            update();
                            break;
                        case EV2:
                            update();
                            break;
                        case EV5:
                            log("trace");
                            break;
                    }
                } else {
                    send("msg1");
                }
                break;
            case EV0:
                try {
                    send("msg7");
                    send("msg3");
                } catch (IllegalStateException e) {
                    try {
                        new S083();
                        log("trace");
                        new Abstract22();
                    } catch (TimeoutException e) {
                        new S004();
                        send("msg0");
                        log("trace");
                    } finally {
                        send("msg2");
                    }
                    new Abstract15();
                }
                break;
        }
        new Abstract23();
    }

    public void close() {
        update();
        send("msg1");
        if (counter > 8) {
            try {
                try {
                    send("msg1");
                    log("trace");
                } finally {
                    new S017();
                    send("msg0");
                }
                if (counter > 8) {
                    new S042();
                }
                log("trace");
            } finally {
                send("msg2");
            }
            try {
                new S035();
                new Abstract9();
            } catch (IOException e) {
                new S070();
            } catch (IllegalStateException e) {
                log("trace");
                new S044();
            }
        } else {
            send("msg5");
        }
    }

    public void start() {
        new S012();
        send("msg5");
        switch (event) {
            case EV0:
                new S069();
                new S066();
                break;
            case EV1:
                new S082();
                break;
            case EV2:
                try {
                    update();
                    new S067();
                } catch (IOException e) {
                    try {
                        new S050();
                        new S077();
                        send("msg1");
                    } catch (TimeoutException e) {
                        new S047();
                        new S072();
                    } catch (IllegalStateException e) {
                        send("msg6");
                        send("msg1");
                        log("trace");
                    } finally {
                        update();
                        new S085();
                        send("msg2");
                    }
                    new S085();
                    send("msg3");
                } finally {
                    send("msg4");
                }
                if (counter > 3) {
                    send("msg2");
                    update();
                    send("msg5");
                }
                break;
        }
    }

    public void stop() {
        new S035();
        new S050();
    }

    public void tick() {
        send("msg3");
    }

    public void reset() {
        new Abstract3();
    }

    public void pause() {
        try {
            new S048();
        } finally {
            if (counter > 7) {
                switch (event) {
                    case EV3:
                        log("trace");
                        send("msg2");
                        break;
                    case EV0:
                        new S068();
                        send("msg3");
                        break;
                    case EV2:
                        send("msg1");
                        new S094();
                        break;
                }
                new S083();
                send("msg4");
            } else {
                log("trace");
            }
        }
        send("msg2");
        new S000();
    }

    public void resume() {
        send("msg4");
        send("msg4");
        new S098();
    }

    public void load() {
        switch (event) {
            case EV0:
                switch (event) {
                    case EV1:
                        send("msg5");
                        send("msg0");
                        break;
                    case EV0:
                        update();
                        send("msg4");
                        break;
                }
                new S037();
                break;
            default:
                new S026();
                break;
        }
    }

    public void save() {
        new S097();
        new Abstract24();
        try {
            update();
        } finally {
            send("msg7");
            new Abstract22();
            try {
                try {
                    send("msg1");
                } catch (TimeoutException e) {
                    send("msg5");
                    new S059();
                } catch (IllegalStateException e) {
                    update();
                    send("msg6");
                    new S098();
                }
            } catch (IllegalStateException e) {
                try {
                    send("msg3");
                    send("msg3");
                } catch (IllegalStateException e) {
                    send("msg0");
                    send("msg7");
                    update();
                }
                if (counter > 5) {
                    log("trace");
                    send("msg7");
                    new S006();
                } else {
                    update();
                    send("msg5");
                }
            } finally {
                try {
                    new S032();
                    new S007();
                    update();
                } catch (TimeoutException e) {
                    update();
                    update();
                }
                new S001();
                send("msg2");
            }
        }
    }
}

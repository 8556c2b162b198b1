public class S075 extends State {
    public void open() {
        switch (event) {
            case EV1:
                send("msg3");
                break;
            case EV5:
                if (counter > 7) {
                    switch (event) {
                        case EV4:
                            send("msg3");
                            break;
                        case EV2:
                            send("msg7");
                            new Abstract14();
                            break;
                    }
                } else {
                    update();
                }
                send("msg5");
                break;
            case EV2:
                try {
                    new S094();
                } catch (TimeoutException e) {
                    new S063();
                    new S035();
                    try {
                        new S067();
                        new S029();
                        new S030();
                    } catch (TimeoutException e) {
                        send("msg5");
                    } finally {
                        new S032();
                        send("msg0");
                    }
                }
                break;
        }
        if (counter > 2) {
            try {
                send("msg0");
                new S044();
                send("msg0");
            } catch (TimeoutException e) {
                switch (event) {
                    case EV0:
                        new S035();
                        break;
                    case EV3:
                        new S016();
                        new S099();
                        break;
                    case EV2:
                        new S040();
                        send("msg3");
                        new S023();
                        break;
                }
            }
            new S070();
            send("msg5");
        } else {
            new S001();
        }
        switch (event) {
            case EV2:
                new S006();
                new Abstract3();
                break;
            case EV3:
                send("msg4");
                send("msg1");
                send("msg5");
                break;
            case EV5:
                log("trace");
                break;
        }
    }

    public void close() {
        try {
            send("msg7");
        } catch (IOException e) {
            send("msg4");
            update();
            send("msg7");
        }
    }

    public void start() {
        send("msg0");
    }

    public void stop() {
        new S032();
        update();
    }

    public void tick() {
        switch (event) {
            case EV1:
                send("msg5");
                break;
            case EV5:
                new S085();
                if (counter > 3) {
                    send("msg5");
                    new S013();
                } else {
                    send("msg1");
                    switch (event) {
                        case EV3:
                            send("msg7");
                            break;
                        case EV2:
                            new S089();
                            break;
                        case EV1:
                            log("trace");
                            break;
                        default:
                            update();
                            new S091();
                            break;
                    }
                    new S079();
                }
                break;
            case EV4:
                update();
                if (counter > 4) {
                    send("msg7");
                    send("msg3");
                    send("msg4");
                }
                break;
        }
    }

    public void reset() {
        send("msg7");
    }

    public void pause() {
        switch (event) {
            case EV0:
                log("trace");
                break;
            case EV4:
                new S057();
                if (counter > 6) {
                    send("msg2");
                } else {
                    if (counter > 8) {
                        send("msg6");
                        send("msg3");
                    }
                    switch (event) {
                        case EV3:
                            send("msg2");
                            break;
                    }
                }
                break;
            case EV1:
                update();
                send("msg7");
                switch (event) {
                    case EV3:
                        send("msg6");
                        log("trace");
                        new S046();
                        break;
                    case EV1:
                        send("msg7");
                        send("msg5");
                        break;
                }
                break;
        }
        new S049();
        log("trace");
    }

    public void resume() {
        if (counter > 1) {
            send("msg5");
            try {
                new S037();
            } catch (IllegalStateException e) {
                new S013();
                send("msg6");
            }
        } else {
            switch (event) {
                case EV2:
                    send("msg5");
                    log("trace");
                    switch (event) {
                        case EV3:
                            send("msg6");
                            break;
                        case EV1:
                            new S059();
                            send("msg3");
                            new S088();
                            break;
                        case EV5:
                            new S060();
                            send("msg3");
                            break;
                    }
                    break;
            }
            log("trace");
            new S038();
        }
    }

    public void load() {
        new Abstract15();
        if (counter > 6) {
            send("msg1");
            switch (event) {
                case EV5:
                    log("trace");
                    if (counter > 2) {
                        send("msg6");
                    }
                    if (counter > 6) {
                        new S016();
                        send("msg3");
                    }
                    break;
                case EV2:
                    try {
                        new S072();
                    } finally {
                        send("msg5");
                        new S048();
                        log("trace");
                    }
                    if (counter > 6) {
                        send("msg1");
                        send("msg3");
                        send("msg0");
                    } else {
                        send("msg6");
                    }
                    update();
                    break;
                default:
                    send("msg3");
                    new S027();
                    break;
            }
            new S027();
        } else {
            new S040();
            if (counter > 5) {
                new S030();
            } else {
                new S044();
                new S077();
                send("msg7");
            }
            new S049();
        }
        new S009();
    }

    public void save() {
        send("msg0");
    }
}

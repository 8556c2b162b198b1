public class S061 extends State {
    public void open() {
        update();
    }

    public void close() {
        update();
        new Abstract3();
        switch (event) {
            case EV4:
                new S042();
                send("msg3");
                break;
            case EV3:
                if (counter > 3) {
                    send("msg1");
                    new S069();
                    new S020();
                } else {
                    log("trace");
                }
                break;
        }
    }

    public void start() {
        new S097();
    }

    public void stop() {
        switch (event) {
            case EV1:
                send("msg1");
                break;
        }
    }

    public void tick() {
        update();
    }

    public void reset() {
        try {
            new S075();
            send("msg2");
        } catch (IllegalStateException e) {
            if (counter > 4) {
                new S054();
                if (counter > 9) {
                    send("msg7");
                } else {
                    send("msg6");
                }
            } else {
                try {
                    new S058();
                    new S057();
                } finally {
                    log("trace");
                    new S054();
                    send("msg7");
                }
                send("msg0");
            }
            switch (event) {
                case EV5:
                    new S049();
                    break;
                case EV3:
                    new S080();
                    break;
            }
            new S058();
        } catch (IOException e) {
            new S075();
            switch (event) {
                case EV0:
                    send("msg6");
                    send("msg0");
                    send("msg6");
                    break;
                case EV3:
                    try {
                        send("msg0");
                    } catch (TimeoutException e) {
                        new S041();
                        send("msg6");
                    } catch (IOException e) {
                        send("msg5");
                    } finally {
                        update();
                    }
                    switch (event) {
                        case EV5:
                            send("msg7");
                            break;
                        case EV3:
                            log("trace");
                            send("msg2");
                            break;
                        case EV1:
                            new S080();
                            update();
                            break;
                        default:
                            send("msg5");
                            new S078();
                            new S025();
                            break;
                    }
                    break;
            }
            switch (event) {
                case EV2:
                    if (counter > 5) {
                        update();
                        send("msg7");
                        new S032();
                    } else {
                        new S081();
                        send("msg6");
                    }
                    break;
                case EV3:
                    switch (event) {
                        case EV2:
                            new S030();
                            break;
                        case EV3:
                            new S068();
                            break;
                        case EV1:
                            log("trace");
                            log("trace");
                            break;
                    }
                    send("msg0");
                    break;
                case EV0:
                    switch (event) {
                        case EV2:
                            send("msg6");
                            send("msg7");
                            break;
                        case EV3:
                            send("msg0");
                            new S072();
                            new S035();
                            break;
                        case EV4:
                            new S054();
                            send("msg7");
                            update();
                            break;
                    }
                    break;
            }
        }
    }

    public void pause() {
        log("trace");
        send("msg2");
        new S063();
    }

    public void resume() {
        update();
    }

    public void load() {
        send("msg1");
    }

    public void save() {
        if (counter > 2) {
            send("msg1");
            update();
            try {
                update();
                switch (event) {
                    case EV3:
                        new S050();
                        break;
                    default:
                        new S087();
                        new S053();
                        send("msg3");
                        break;
                }
            } catch (IOException e) {
                switch (event) {
                    case EV4:
                        update();
                        break;
                    default:
                        new S023();
                        send("msg5");
                        break;
                }
                if (counter > 0) {
                    send("msg1");
                    send("msg1");
                    new S017();
                } else {
                    new S045();
                    send("msg7");
                }
            } finally {
                switch (event) {
                    case EV1:
                        update();
                        update();
                        break;
                }
            }
        }
        new S047();
        send("msg1");
    }
}

public class S062 extends Abstract15 {
    public void open() {
        if (counter > 9) {
            switch (event) {
                case EV1:
                    new S047();
                    log("trace");
                    break;
            }
            log("trace");
        }
        send("msg4");
        send("msg0");
    }

    public void close() {
        try {
            log("trace");
            try {
                if (counter > 9) {
                    send("msg3");
                    send("msg3");
                } else {
                    new S090();
                }
            } finally {
                log("trace");
                new S023();
                send("msg6");
            }
        } catch (IOException e) {
            if (counter > 8) {
                try {
                    update();
                    new S053();
                    update();
                } catch (TimeoutException e) {
                    send("msg3");
                    log("trace");
                }
                switch (event) {
                    case EV4:
                        new Abstract3();
                        update();
                        break;
                    case EV1:
                        send("msg1");
                        new S007();
                        break;
                }
                send("msg6");
            } else {
                send("msg1");
                send("msg6");
                update();
            }
        }
        send("msg1");
    }

    public void start() {
        if (counter > 2) {
            send("msg7");
            try {
                if (counter > 4) {
                    send("msg1");
                    new S098();
                } else {
                    new S006();
                }
            } finally {
                send("msg4");
                update();
            }
            send("msg5");
        } else {
            try {
                send("msg5");
                try {
                    new S081();
                } catch (IOException e) {
                    send("msg2");
                    new S004();
                    new Abstract24();
                }
            } finally {
                switch (event) {
                    case EV4:
                        new S087();
                        new S025();
                        log("trace");
                        break;
                    case EV2:
                        send("msg3");
                        send("msg3");
                        break;
                    default:
                        new S099();
                        break;
                }
            }
            send("msg0");
        }
        new S018();
        new S035();
    }

    public void stop() {
        send("msg4");
    }

    public void tick() {
        update();
        log("trace");
        new Abstract23();
    }

    public void reset() {
        send("msg1");
        new S067();
        new S097();
    }

    public void pause() {
        switch (event) {
            case EV2:
                send("msg0");
                send("msg7");
                new S034();
                break;
        }
    }

    public void resume() {
        if (counter > 2) {
            new S035();
            send("msg3");
        } else {
            new S067();
            new S061();
            send("msg2");
        }
        send("msg2");
    }

    public void load() {
        try {
            if (counter > 3) {
                switch (event) {
                    case EV2:
                        new S071();
                        break;
                    case EV5:
                        send("msg4");
                        new S028();
                        break;
                    default:
                        update();
                        break;
                }
                switch (event) {
                    case EV4:
                        send("msg0");
                        send("msg3");
                        break;
                }
                log("trace");
            } else {
                new Abstract0();
                try {
                    new S003();
                } catch (TimeoutException e) {
                    new S053();
                    new Abstract7();
                }
                switch (event) {
                    case EV3:
                        send("msg7");
                        break;
                    case EV1:
                        new S055();
                        new S016();
                        break;
                }
            }
            new S083();
        } catch (TimeoutException e) {
            try {
                new S061();
            } catch (IllegalStateException e) {
                send("msg3");
                log("trace");
            }
            send("msg3");
        } finally {
            switch (event) {
                case EV1:
                    try {
                        send("msg0");
                        log("trace");
                    } catch (TimeoutException e) {
                        send("msg0");
                        send("msg7");
                    }
                    break;
                case EV4:
                    update();
                    break;
                default:
                    new S036();
                    break;
            }
            send("msg4");
        }
    }

    public void save() {
        switch (event) {
            case EV4:
                if (counter > 1) {
                    send("msg7");
                    new S066();
                    switch (event) {
                        case EV4:
                            new S081();
                            break;
                        case EV5:
                            new S031();
                            new S010();
                            break;
                        case EV0:
                            log("trace");
                            break;
                    }
                } else {
                    switch (event) {
                        case EV3:
                            new S032();
                            new S082();
                            break;
                    }
                    new S049();
                    send("msg2");
                }
                send("msg6");
                break;
            case EV5:
                send("msg5");
                new S082();
                update();
                break;
            case EV0:
                update();
                update();
                break;
        }
    }
}

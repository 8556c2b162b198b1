public class S040 extends State {
    public void open() {
        new Abstract19();
        if (counter > 8) {
            new S071();
        }
    }

    public void close() {
        new S087();
    }

    public void start() {
        try {
            new S011();
        } finally {
            switch (event) {
                case EV3:
                    new S082();
                    break;
                case EV5:
                    new Abstract23();
                    break;
            }
            log("trace");
            new S031();
        }
    }

    public void stop() {
        switch (event) {
            case EV1:
                new Abstract13();
                break;
            case EV4:
                new S016();
                break;
            case EV2:
                new Abstract0();
                break;
        }
    }

    public void tick() {
        send("msg7");
        log("trace");
    }

    public void reset() {
        send("msg4");
        send("msg6");
        new S029();
    }

    public void pause() {
        send("msg6");
        new S087();
        if (counter > 9) {
            new S059();
            new S058();
            send("msg7");
        }
    }

    public void resume() {
        send("msg3");
        switch (event) {
            case EV1:
                new S056();
                new S007();
                break;
        }
        send("msg6");
    }

    public void load() {
        try {
            send("msg1");
            new S042();
            update();
        } catch (IOException e) {
            log("trace");
            new S075();
        } catch (IllegalStateException e) {
            switch (event) {
                case EV2:
                    try {
                        send("msg0");
                    } catch (IllegalStateException e) {
                        new S026();
                    } finally {
                        send("msg7");
                        new S085();
                        log("trace");
                    }
                    break;
                case EV3:
                    try {
                        new S080();
                        update();
                        update();
                    } catch (IOException e) {
                        send("msg2");
                        log("trace");
                    }
                    break;
                case EV4:
                    new Abstract13();
                    if (counter > 5) {
                        send("msg4");
                    } else {
                        send("msg6");
                        new S059();
                        new S074();
                    }
                    new S051();
                    break;
            }
        } finally {
            new S080();
            switch (event) {
                case EV2:
                    send("msg6");
                    new S075();
                    break;
                case EV5:
                    switch (event) {
                        case EV3:
                            update();
                            update();
                            send("msg3");
                            break;
                    }
                    new S063();
                    break;
            }
        }
        try {
            send("msg5");
            send("msg3");
        } catch (IllegalStateException e) {
            if (counter > 1) {
                new S054();
                send("msg2");
                new Helper();
            } else {
                log("trace");
            }
            try {
                try {
                    new S034();
                } finally {
                    new S081();
                    send("msg4");
                    new S005();
                }
                if (counter > 1) {
                    new S057();
                    new S012();
                    update();
                } else {
                    new Abstract16();
                    update();
                }
                send("msg4");
            } finally {
                send("msg2");
                log("trace");
                update();
            }
        } catch (IOException e) {
            send("msg0");
        } finally {
            send("msg0");
        }
    }

    public void save() {
        if (counter > 2) {
            switch (event) {
                case EV0:
                    try {
                        update();
                        send("msg6");
                    } catch (TimeoutException e) {
                        update();
                    }
                    if (counter > 8) {
                        new S089();
                        update();
                        new Abstract20();
                    } else {
                        send("msg7");
                        update();
                        update();
                    }
                    break;
                case EV3:
                    if (counter > 1) {
                        new S098();
                        send("msg3");
                    } else {
                        update();
                        new Abstract1();
                        new S080();
                    }
                    switch (event) {
                        case EV2:
                            send("msg7");
                            break;
                        case EV1:
                            new S007();
                            new S005();
                            break;
                        case EV3:
                            new S059();
                            new S026();
                            send("msg6");
                            break;
                    }
                    break;
            }
        }
        try {
            new S095();
        } catch (IOException e) {
            new S033();
            try {
                switch (event) {
                    case EV1:
                        send("msg2");
                        break;
                    case EV5:
                        new Abstract10();
                        new S032();
                        break;
                    case EV0:
                        new Abstract17();
                        send("msg6");
                        break;
                    default:
                        new S000();
                        log("trace");
                        break;
                }
                try {
                    log("trace");
                    send("msg5");
                    new S072();
                } finally {
                    send("msg7");
                    new S050();
                }
                try {
                    new S092();
                    log("trace");
                } finally {
                    send("msg2");
                    send("msg4");
                    new S062();
                }
            } catch (TimeoutException e) {
                send("msg2");
                new S049();
            } catch (IOException e) {
                send("msg5");
                try {
                    new S051();
                    new S080();
                    log("trace");
                } catch (IllegalStateException e) {
                    send("msg6");
                    send("msg1");
                } catch (TimeoutException e) {
                    send("msg7");
                    send("msg0");
                    new S070();
                }
                if (counter > 4) {
                    new S032();
                    new S098();
                    update();
                } else {
                    new S019();
                }
            }
            switch (event) {
                case EV0:
                    send("msg2");
                    break;
                default:
                    if (counter > 2) {
                        send("msg5");
                    } else {
                        new S082();
                    }
                    break;
            }
        } catch (IllegalStateException e) {
            if (counter > 7) {
                log("trace");
            } else {
                new S023();
                try {
                    log("trace");
                } catch (IOException e) {
                    send("msg2");
                    new S001();
                    new S032();
                } catch (TimeoutException e) {
                    send("msg4");
                    new S005();
                    new S066();
                }
                send("msg1");
            }
            switch (event) {
                case EV4:
                    send("msg7");
                    new S037();
                    break;
                case EV2:
                    switch (event) {
                        case EV2:
                            new S062();
                            update();
                            break;
                        case EV1:
                            new S079();
                            break;
                        default:
                            new S073();
                            log("trace");
                            log("trace");
                            break;
                    }
                    log("trace");
                    new S054();
                    break;
                case EV3:
                    if (counter > 0) {
                        send("msg7");
                        send("msg6");
                        new S008();
                    }
                    log("trace");
                    if (counter > 8) {
                        new S084();
                        new Abstract1();
                        send("msg2");
                    }
                    break;
            }
            log("trace");
        }
    }
}

public class S073 extends State {
    public void open() {
        if (counter > 4) {
            if (counter > 9) {
                switch (event) {
                    case EV4:
                        new Abstract17();
                        break;
                    case EV5:
                        new S077();
                        send("msg1");
                        break;
                }
                if (counter > 3) {
                    send("msg1");
                    send("msg3");
                }
            } else {
                switch (event) {
                    case EV3:
                        send("msg7");
                        break;
                    case EV5:
                        log("trace");
                        break;
                    case EV4:
                        log("trace");
                        break;
                }
                try {
                    log("trace");
                } catch (IllegalStateException e) {
                    new S000();
                }
            }
            if (counter > 9) {
                if (counter > 5) {
                    new S025();
                    send("msg1");
                }
                try {
                    send("msg7");
                    send("msg0");
                } finally {
                    update();
                    send("msg3");
                }
            }
            send("msg6");
        }
        send("msg6");
    }

    public void close() {
        new S042();
        send("msg3");
    }

    public void start() {
        update();
    }

    public void stop() {
        new S036();
        send("msg6");
    }

    public void tick() {
        update();
        send("msg4");
        new S068();
    }

    public void reset() {
        switch (event) {
            case EV5:
                switch (event) {
                    case EV0:
                        new S027();
                        if (counter > 1) {
                            send("msg0");
                            update();
                        }
                        new S027();
                        break;
                    case EV5:
                        new S087();
                        break;
                    case EV4:
                        log("trace");
                        new S054();
                        send("msg4");
                        break;
                }
                new S018();
                break;
            case EV3:
                send("msg5");
                break;
            case EV2:
                if (counter > 7) {
                    new S093();
                    new S066();
                    update();
                } else {
                    log("trace");
                }
                new S066();
                new S062();
                break;
            default:
                new S008();
                break;
        }
        send("msg2");
        switch (event) {
            case EV1:
                switch (event) {
                    case EV0:
                        switch (event) {
                            case EV3:
                                new S094();
                                log("trace");
                                break;
                            case EV1:
                                send("msg4");
                                break;
                            case EV4:
                                new Abstract21();
                                break;
                        }
                        break;
                    case EV4:
                        try {
                            send("msg6");
                            send("msg2");
                            new S070();
                        } finally {
                            new S039();
                            new S044();
                        }
                        new S024();
                        break;
                    case EV2:
                        new S018();
                        new Abstract14();
                        switch (event) {
                            case EV4:
                                update();
                                send("msg6");
                                break;
                            case EV5:
                                new S032();
                                log("trace");
                                break;
                        }
                        break;
                }
                break;
            case EV2:
                switch (event) {
                    case EV0:
                        switch (event) {
                            case EV5:
                                new S000();
                                new S022();
                                break;
                            default:
                                new S047();
                                new S055();
                                send("msg4");
                                break;
                        }
                        send("msg5");
                        new Abstract23();
                        break;
                    case EV1:
                        new S036();
                        break;
                    case EV5:
                        new S081();
                        break;
                    default:
                        send("msg1");
                        send("msg4");
                        send("msg2");
                        break;
                }
                update();
                new Abstract14();
                break;
        }
    }

    public void pause() {
        new S099();
        new S048();
        new Abstract13();
    }

    public void resume() {
        switch (event) {
            case EV1:
                try {
                    update();
                    new S055();
                    try {
                        new S043();
                    } finally {
                        send("msg4");
                        new S071();
                        update();
                    }
                } catch (TimeoutException e) {
                    new S031();
                    try {
                        new S086();
                        update();
                    } catch (TimeoutException e) {
                        send("msg7");
                        new S004();
                        new S079();
                    } catch (IllegalStateException e) {
                        update();
                        new S088();
                        send("msg1");
                    }
                } finally {
                    send("msg6");
                }
                send("msg4");
                send("msg6");
                break;
            case EV4:
                send("msg0");
                send("msg1");
                new S089();
                break;
        }
        new S048();
    }

    public void load() {
        try {
            switch (event) {
                case EV5:
                    if (counter > 6) {
                        new S024();
                        new S086();
                        new Abstract7();
                    } else {
                        update();
                    }
                    break;
                case EV3:
                    new S012();
                    log("trace");
                    update();
                    break;
                case EV0:
                    send("msg1");
                    switch (event) {
                        case EV3:
                            new S028();
                            new S080();
                            new S012();
                            break;
                        case EV5:
                            send("msg2");
                            new S079();
                            send("msg4");
                            break;
                        case EV2:
                            update();
                            break;
                        default:
                            update();
                            break;
                    }
                    if (counter > 1) {
                        log("trace");
                        new S021();
                    }
                    break;
            }
            new S081();
            switch (event) {
                case EV0:
                    switch (event) {
                        case EV0:
                            send("msg0");
                            break;
                        case EV5:
                            send("msg6");
                            send("msg7");
                            break;
                        case EV2:
                            new S087();
                            new S066();
                            new S008();
                            break;
                    }
                    try {
                        update();
                    } catch (IOException e) {
                        new S091();
                        update();
                    } finally {
                        send("msg3");
                        send("msg4");
                        new S011();
                    }
                    try {
                        new S002();
                        send("msg2");
                        send("msg6");
                    } finally {
                        send("msg3");
                    }
                    break;
                case EV2:
                    log("trace");
                    try {
                        new S099();
                    } catch (IOException e) {
                        send("msg1");
                        new S039();
                        new S011();
                    } catch (IllegalStateException e) {
                        send("msg0");
                        send("msg5");
                    } finally {
                        new S004();
                    }
                    send("msg0");
                    break;
                case EV4:
                    send("msg7");
                    new Abstract12();
                    new S017();
                    break;
            }
        } finally {
            new S016();
            send("msg1");
        }
        new S059();
        log("trace");
    }

    public void save() {
        new S080();
        try {
            new S008();
            log("trace");
        } finally {
            if (counter > 2) {
                if (counter > 1) {
                    send("msg4");
                    new S086();
                    update();
                }
            }
            send("msg6");
        }
        send("msg2");
    }
}

public class S003 extends State {
    public void open() {
        log("trace");
    }

    public void close() {
        switch (event) {
            case EV3:
                send("msg2");
                break;
            case EV1:
                switch (event) {
                    case EV4:
                        update();
                        switch (event) {
                            case EV2:
                                send("msg0");
                                new S015();
                                new S033();
                                break;
                            case EV3:
                                new S052();
                                break;
                            case EV1:
                                new Abstract3();
                                new S069();
                                break;
                        }
                        break;
                    case EV3:
                        new S011();
                        break;
                }
                send("msg5");
                break;
        }
        if (counter > 8) {
            new S024();
            send("msg2");
        }
    }

    public void start() {
        update();
        try {
            new S007();
        } catch (TimeoutException e) {
            new S094();
            try {
                update();
                new S042();
            } catch (IllegalStateException e) {
                send("msg4");
                if (counter > 6) {
                    new S014();
                } else {
                    new S093();
                    send("msg2");
                    log("trace");
                }
            }
        } finally {
            send("msg1");
            update();
        }
        send("msg6");
    }

    public void stop() {
        try {
            if (counter > 4) {
                new Helper();
            } else {
                new S035();
                update();
            }
            new S015();
        } catch (TimeoutException e) {
            switch (event) {
                case EV0:
                    switch (event) {
                        case EV0:
                            update();
                            break;
                    }
                    if (counter > 7) {
                        send("msg6");
                    }
                    update();
                    break;
                case EV5:
                    switch (event) {
                        case EV0:
                            send("msg7");
                            new S055();
                            new S016();
                            break;
                        case EV3:
                            send("msg2");
                            new S094();
                            send("msg4");
                            break;
                        case EV1:
                            new Abstract18();
                            send("msg3");
                            break;
                    }
                    new S000();
                    new S050();
                    break;
                default:
                    switch (event) {
                        case EV5:
                            new S061();
                            break;
                    }
                    send("msg4");
                    new S040();
                    break;
            }
        } catch (IllegalStateException e) {
            try {
                new S027();
                try {
                    new S097();
                    new S056();
                    new S068();
                } finally {
                    new S001();
                    send("msg6");
                }
                send("msg2");
            } catch (IllegalStateException e) {
                new S043();
            } finally {
                log("trace");
            }
            switch (event) {
                case EV0:
                    if (counter > 5) {
                        new S026();
                        new Abstract10();
                        log("trace");
                    } else {
                        new S008();
                    }
                    new S078();
                    break;
                case EV2:
                    update();
                    log("trace");
                    break;
            }
            switch (event) {
                case EV5:
                    new S055();
                    send("msg5");
                    send("msg1");
                    break;
                case EV4:
                    switch (event) {
                        case EV1:
                            send("msg2");
                            new S092();
                            break;
                    }
                    break;
                case EV3:
                    log("trace");
                    break;
                default:
                    if (counter > 2) {
                        send("msg7");
                        new Abstract16();
                    }
                    break;
            }
        }
        log("trace");
        new S070();
    }

    public void tick() {
        if (counter > 6) {
            switch (event) {
                case EV1:
                    send("msg7");
                    break;
                case EV0:
                    switch (event) {
                        case EV3:
                            send("msg6");
                            break;
                        default:
                            send("msg2");
                            break;
                    }
                    new S027();
                    break;
            }
        } else {
            send("msg6");
        }
        log("trace");
    }

    public void reset() {
        switch (event) {
            case EV1:
                switch (event) {
                    case EV3:
                        new S061();
                        if (counter > 3) {
                            new S080();
                            new S065();
                            send("msg3");
                        }
                        send("msg4");
                        break;
                    case EV2:
                        if (counter > 8) {
                            send("msg2");
                            send("msg2");
                            send("msg4");
                        } else {
                            new S016();
                            send("msg3");
                        }
                        new S049();
                        break;
                }
                break;
            case EV4:
                switch (event) {
                    case EV1:
                        log("trace");
                        new S099();
                        break;
                    case EV0:
                        if (counter > 7) {
                            new S070();
                        } else {
                            send("msg6");
                            new S055();
                            send("msg5");
                        }
                        break;
                }
                break;
            default:
                new S077();
                new Abstract14();
                break;
        }
        send("msg4");
    }

    public void pause() {
        if (counter > 2) {
            send("msg6");
            send("msg3");
        } else {
            if (counter > 9) {
                switch (event) {
                    case EV3:
                        send("msg5");
                        break;
                    case EV0:
                        send("msg3");
                        break;
                    default:
                        new S037();
                        send("msg5");
                        send("msg1");
                        break;
                }
            }
            if (counter > 9) {
                send("msg0");
            }
            switch (event) {
                case EV3:
                    log("trace");
                    send("msg3");
                    switch (event) {
                        case EV3:
                            update();
                            send("msg7");
                            log("trace");
                            break;
                        case EV4:
                            new S066();
                            break;
                        case EV1:
                            log("trace");
                            send("msg6");
                            break;
                    }
                    break;
                case EV5:
                    log("trace");
                    new S031();
                    break;
            }
        }
        new S005();
    }

    public void resume() {
        new S059();
        log("trace");
    }

    public void load() {
        switch (event) {
            case EV4:
                switch (event) {
                    case EV5:
                        try {
                            update();
                        } catch (TimeoutException e) {
                            send("msg5");
                        } catch (IOException e) {
                            new S071();
                        } finally {
                            new S051();
                        }
                        new S014();
                        log("trace");
                        break;
                }
                update();
                break;
            case EV0:
                try {
                    send("msg6");
                    switch (event) {
                        case EV0:
                            new S021();
                            break;
                        case EV4:
                            send("msg7");
                            new S083();
                            break;
                    }
                    if (counter > 9) {
                        log("trace");
                    }
                } finally {
                    send("msg5");
                }
                break;
        }
    }

    public void save() {
        switch (event) {
            case EV2:
                if (counter > 0) {
                    send("msg3");
                    switch (event) {
                        case EV4:
                            send("msg7");
                            new S031();
                            break;
                        case EV3:
                            send("msg4");
                            break;
                        case EV0:
                            send("msg3");
                            send("msg6");
                            send("msg5");
                            break;
                    }
                    try {
                        new S041();
                        send("msg6");
                    } finally {
                        update();
                        new S014();
                    }
                } else {
                    new S074();
                }
                try {
                    send("msg0");
                    new Abstract12();
                } finally {
                    if (counter > 8) {
                        update();
                    }
                    send("msg2");
                }
                break;
            case EV3:
                new S097();
                send("msg3");
                send("msg6");
                break;
        }
        if (counter > 8) {
            switch (event) {
                case EV0:
                    new S032();
                    new S027();
                    break;
                case EV2:
                    if (counter > 2) {
                        new S070();
                        log("trace");
                    }
                    break;
                case EV3:
                    new S080();
                    send("msg4");
                    break;
            }
            try {
                send("msg7");
            } catch (IOException e) {
                if (counter > 3) {
                    new S001();
                    send("msg5");
                } else {
                    send("msg2");
                    update();
                }
                new S059();
                new Abstract5();
            } finally {
                new S059();
                send("msg4");
                new S056();
            }
        }
    }
}

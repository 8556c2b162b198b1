public class S095 extends State {
    public void open() {
        if (counter > 9) {
            new S032();
            new S054();
        } else {
            new S020();
        }
        switch (event) {
            case EV2:
                new S085();
                send("msg7");
                break;
            case EV0:
                switch (event) {
                    case EV3:
                        new S004();
                        send("msg0");
                        log("trace");
                        break;
                }
                if (counter > 9) {
                    send("msg0");
                    send("msg4");
                    switch (event) {
                        case EV4:
                            new S062();
                            new S068();
                            new Abstract19();
                            break;
                        default:
                            new S044();
                            break;
                    }
                } else {
                    switch (event) {
                        case EV0:
                            send("msg0");
                            break;
                        case EV4:
                            send("msg7");
                            new S023();
                            new S096();
                            break;
                        case EV3:
                            send("msg5");
                            break;
                    }
                    send("msg0");
                }
                try {
                    switch (event) {
                        case EV5:
                            new S038();
                            send("msg0");
                            update();
                            break;
                        case EV1:
                            send("msg1");
                            new Abstract5();
                            update();
                            break;
                        case EV2:
                            log("trace");
                            new S082();
                            new S071();
                            break;
                    }
                    try {
                        send("msg1");
                    } finally {
                        log("trace");
                        send("msg5");
                    }
                    if (counter > 9) {
                        send("msg1");
                    }
                } finally {
                    new S008();
                    log("trace");
                    if (counter > 7) {
                        log("trace");
                        send("msg2");
                    }
                }
                break;
            case EV1:
                switch (event) {
                    case EV5:
                        try {
                            log("trace");
                            new S084();
                            send("msg6");
                        } catch (IllegalStateException e) {
                            new S044();
                        } catch (IOException e) {
                            send("msg0");
                            send("msg4");
                        } finally {
                            new S023();
                            new S019();
                        }
                        new S028();
                        break;
                    case EV0:
                        if (counter > 4) {
                            send("msg6");
                            new S010();
                        }
                        if (counter > 2) {
                            new S094();
                        }
                        switch (event) {
                            case EV2:
                                send("msg7");
                                break;
                            case EV0:
                                new S045();
                                break;
                            case EV5:
                                new S042();
                                send("msg3");
                                log("trace");
                                break;
                            default:
                                new S003();
                                send("msg6");
                                send("msg7");
                                break;
                        }
                        break;
                    default:
                        try {
                            send("msg4");
                            send("msg4");
                            new S075();
                        } catch (TimeoutException e) {
                            new S051();
                            send("msg3");
                        }
                        log("trace");
                        break;
                }
                log("trace");
                break;
            default:
                new S022();
                update();
                switch (event) {
                    case EV4:
                        switch (event) {
                            case EV0:
                                new S027();
                                send("msg6");
                                new S043();
                                break;
                            default:
                                log("trace");
                                break;
                        }
                        update();
                        new S020();
                        break;
                    case EV1:
                        if (counter > 4) {
                            send("msg4");
                            update();
                        } else {
                            send("msg1");
                            new S097();
                        }
                        break;
                    case EV0:
                        update();
                        send("msg2");
                        send("msg3");
                        break;
                }
                break;
        }
        new S034();
    }

    public void close() {
        try {
            update();
            send("msg5");
        } catch (IllegalStateException e) {
            log("trace");
        } catch (TimeoutException e) {
            new S097();
            update();
        } finally {
            switch (event) {
                case EV3:
                    new S060();
                    if (counter > 1) {
                        new S031();
                        send("msg7");
                        send("msg3");
                    } else {
                        send("msg3");
                        update();
                        new S020();
                    }
                    new S023();
                    break;
            }
            new S021();
            update();
        }
        try {
            new S021();
            send("msg1");
            send("msg4");
        } catch (IllegalStateException e) {
            switch (event) {
                case EV3:
                    switch (event) {
                        case EV1:
                            log("trace");
                            new S072();
                            send("msg7");
                            break;
                    }
                    break;
                case EV4:
                    send("msg6");
                    send("msg5");
                    break;
            }
            switch (event) {
                case EV2:
                    switch (event) {
                        case EV5:
                            send("msg1");
                            new S003();
                            send("msg4");
                            break;
                        case EV4:
                            new S054();
                            new S070();
                            send("msg0");
                            break;
                    }
                    if (counter > 2) {
                        update();
                        log("trace");
                    } else {
                        new S029();
                        new S003();
                        new S067();
                    }
                    break;
                case EV0:
                    send("msg5");
                    log("trace");
                    switch (event) {
                        case EV5:
                            new S022();
                            send("msg4");
                            send("msg1");
                            break;
                        case EV1:
                            log("trace");
                            send("msg7");
                            new S033();
                            break;
                    }
                    break;
                default:
                    send("msg0");
                    send("msg5");
                    if (counter > 6) {
                        send("msg7");
                        send("msg0");
                        new S086();
                    }
                    break;
            }
        }
        try {
            new S022();
            new S044();
            try {
                log("trace");
            } finally {
                log("trace");
            }
        } catch (IOException e) {
            update();
            if (counter > 1) {
                send("msg0");
                update();
                try {
                    send("msg0");
                } catch (IOException e) {
                    send("msg7");
                } catch (TimeoutException e) {
                    new S059();
                    new Abstract0();
                    new S093();
                } finally {
                    new S068();
                    log("trace");
                }
            } else {
                try {
                    new S014();
                } finally {
                    send("msg2");
                    new S038();
                }
                update();
                send("msg7");
            }
        }
    }

    public void start() {
        send("msg0");
    }

    public void stop() {
        new S059();
    }

    public void tick() {
        send("msg6");
        new S038();
    }

    public void reset() {
        switch (event) {
            case EV3:
                send("msg0");
                break;
            case EV2:
                new S012();
                break;
        }
        new Abstract0();
        new S040();
    }

    public void pause() {
        if (counter > 5) {
            log("trace");
        } else {
            if (counter > 4) {
                try {
                    send("msg1");
                } finally {
                    log("trace");
                    new S057();
                }
            } else {
                try {
                    new S059();
                } finally {
                    update();
                }
            }
            send("msg5");
            send("msg5");
        }
    }

    public void resume() {
        log("trace");
        switch (event) {
            case EV4:
                new S071();
                break;
            default:
                try {
                    if (counter > 9) {
                        send("msg0");
                    } else {
                        update();
                    }
                } finally {
                    new S024();
                    new S090();
                }
                break;
        }
        update();
    }

    public void load() {
        update();
    }

    public void save() {
        update();
        new S030();
    }
}

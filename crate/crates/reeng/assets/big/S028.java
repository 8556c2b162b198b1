public class S028 extends Abstract19 {
    public void open() {
        update();
        new Abstract0();
    }

    public void close() {
        send("msg3");
    }

    public void start() {
        try {
            new S066();
            log("trace");
        } finally {
            try {
                send("msg5");
                switch (event) {
                    case EV2:
                        new S072();
                        break;
                    case EV0:
                        new S017();
                        break;
                    case EV4:
                        send("msg2");
                        break;
                    default:
                        send("msg5");
                        new S091();
                        new S050();
                        break;
                }
            } catch (IllegalStateException e) {
                if (counter > 7) {
                    log("trace");
                }
            } catch (IOException e) {
                update();
                switch (event) {
                    case EV1:
                        update();
                        break;
                    case EV2:
                        new S026();
                        new S059();
                        break;
                    case EV4:
                        send("msg6");
                        update();
                        new S070();
                        break;
                    default:
                        send("msg7");
                        break;
                }
                switch (event) {
                    case EV3:
                        update();
                        new S012();
                        break;
                    case EV5:
                        send("msg3");
                        send("msg4");
                        new S025();
                        break;
                }
            }
            send("msg7");
        }
    }

    public void stop() {
        send("msg3");
        new S088();
    }

    public void tick() {
        switch (event) {
            case EV2:
                send("msg6");
                break;
            case EV0:
                log("trace");
                try {
                    send("msg0");
                } catch (IllegalStateException e) {
                    send("msg7");
                } catch (IOException e) {
                    switch (event) {
                        case EV2:
                            send("msg6");
                            log("trace");
                            break;
                        case EV4:
                            update();
                            break;
                        case EV1:
                            log("trace");
                            send("msg0");
                            log("trace");
                            break;
                    }
                    log("trace");
                } finally {
                    if (counter > 1) {
                        send("msg4");
                        update();
                    }
                    send("msg1");
                }
                break;
            case EV5:
                try {
                    switch (event) {
                        case EV0:
                            log("trace");
                            break;
                        case EV3:
                            log("trace");
                            new S009();
                            send("msg1");
                            break;
                    }
                    switch (event) {
                        case EV4:
                            send("msg4");
                            new S009();
                            send("msg1");
                            break;
                    }
                    if (counter > 5) {
                        new S087();
                    } else {
                        send("msg1");
                        new S028();
                        send("msg6");
                    }
                } catch (TimeoutException e) {
                    try {
                        send("msg1");
                        send("msg3");
                    } catch (IOException e) {
                        send("msg3");
                        send("msg2");
                        new S094();
                    } catch (IllegalStateException e) {
                        new S021();
                    }
                    send("msg4");
                }
                send("msg6");
                break;
        }
        new S095();
        new S078();
    }

    public void reset() {
        try {
            update();
        } finally {
            switch (event) {
                case EV4:
                    send("msg7");
                    new S079();
                    break;
                case EV2:
                    new Abstract4();
                    send("msg7");
                    break;
            }
            try {
                switch (event) {
                    case EV4:
                        new S025();
                        send("msg3");
                        break;
                }
                try {
                    new S052();
                    new S040();
                } finally {
                    send("msg1");
                    log("trace");
                }
                try {
                    update();
                    new S001();
                } catch (TimeoutException e) {
                    log("trace");
                    log("trace");
                    send("msg0");
                } catch (IllegalStateException e) {
                    send("msg3");
                    send("msg2");
                    new S070();
                }
            } catch (IOException e) {
                log("trace");
                if (counter > 6) {
                    send("msg7");
                    new S088();
                    update();
                } else {
                    send("msg1");
                }
            }
            send("msg6");
        }
    }

    public void pause() {
        send("msg2");
        send("msg3");
    }

    public void resume() {
        if (counter > 1) {
            send("msg0");
            if (counter > 7) {
                send("msg5");
                log("trace");
                new S088();
            } else {
                switch (event) {
                    case EV4:
                        send("msg5");
                        new S098();
                        update();
                        break;
                    case EV1:
                        send("msg3");
                        break;
                    default:
                        new S069();
                        new S015();
                        break;
                }
                if (counter > 9) {
                    new S054();
                }
            }
            try {
                log("trace");
                if (counter > 2) {
                    new S037();
                    log("trace");
                    send("msg1");
                }
                new S061();
            } finally {
                if (counter > 2) {
                    new S016();
                } else {
                    new S039();
                    send("msg2");
                }
            }
        }
        switch (event) {
            case EV4:
                send("msg0");
                new S032();
                send("msg7");
                break;
            case EV0:
                update();
                break;
            case EV5:
                send("msg7");
                break;
        }
        send("msg0");
    }

    public void load() {
        update();
    }

    public void save() {
        try {
            new S030();
            new S002();
        } catch (IOException e) {
            send("msg3");
            send("msg1");
            new S036();
        } catch (IllegalStateException e) {
            switch (event) {
                case EV2:
                    switch (event) {
                        case EV2:
                            send("msg1");
                            update();
                            new S057();
                            break;
                    }
                    try {
                        new S042();
                        send("msg7");
                        new S092();
                    } catch (IOException e) {
                        new S017();
                    } finally {
                        send("msg2");
                        send("msg2");
                        send("msg7");
                    }
                    break;
            }
        } finally {
            switch (event) {
                case EV0:
                    try {
                        new S092();
                        new S033();
                    } catch (IllegalStateException e) {
                        new S046();
                    } catch (IOException e) {
                        update();
                    }
                    break;
                case EV5:
                    new S042();
                    send("msg3");
                    break;
                case EV4:
                    switch (event) {
                        case EV4:
                            update();
                            log("trace");
                            break;
                        case EV1:
                            new S096();
                            new S027();
                            new S034();
                            break;
                    }
                    break;
            }
        }
        if (counter > 3) {
            new S097();
            update();
            switch (event) {
                case EV5:
                    switch (event) {
                        case EV3:
                            new S097();
                            send("msg3");
                            break;
                        case EV2:
                            new S083();
                            send("msg2");
                            break;
                        case EV0:
                            update();
                            send("msg2");
                            log("trace");
                            break;
                    }
                    update();
                    break;
                case EV3:
                    send("msg0");
                    try {
                        send("msg2");
                    } catch (IOException e) {
                        update();
                    } catch (IllegalStateException e) {
                        send("msg7");
                    }
                    break;
                case EV4:
                    try {
                        send("msg2");
                    } catch (TimeoutException e) {
                        new Abstract12();
                        new S050();
                    }
                    break;
            }
        }
    }
}

public class S038 extends Abstract16 {
    public void open() {
        switch (event) {
            case EV3:
                if (counter > 5) {
                    if (counter > 1) {
                        send("msg1");
                    } else {
                        new S046();
                    }
                    if (counter > 9) {
                        send("msg7");
                        new S035();
                    }
                    try {
                        send("msg6");
                        log("trace");
                        update();
                    } finally {
                        send("msg6");
                    }
                }
                if (counter > 0) {
                    send("msg7");
                } else {
                    log("trace");
                    send("msg1");
                }
                new S064();
                break;
            case EV5:
                send("msg2");
                new S026();
                new Abstract21();
                break;
            case EV4:
                send("msg6");
                switch (event) {
                    case EV5:
                        switch (event) {
                            case EV4:
                                send("msg1");
                                break;
                            case EV2:
                                new S013();
                                break;
                            case EV1:
                                new S080();
                                break;
                        }
                        break;
                    case EV1:
                        log("trace");
                        new S091();
                        break;
                    case EV3:
                        update();
                        send("msg2");
                        break;
                }
                send("msg6");
                break;
            default:
                new S001();
                switch (event) {
                    case EV2:
                        new S025();
                        if (counter > 1) {
                            log("trace");
                        }
                        break;
                }
                new S011();
                break;
        }
        try {
            new S018();
            if (counter > 9) {
                new S096();
                new S056();
            } else {
                if (counter > 7) {
                    update();
                    update();
                    new S039();
                } else {
                    new Abstract3();
                    send("msg7");
                }
                if (counter > 0) {
                    send("msg6");
                } else {
                    send("msg7");
                    send("msg6");
                    update();
                }
            }
            if (counter > 2) {
                if (counter > 7) {
                    update();
                    new S056();
                    log("trace");
                } else {
                    send("msg4");
                }
                switch (event) {
                    case EV4:
                        new S067();
                        new S076();
                        break;
                    case EV0:
                        send("msg5");
                        send("msg1");
                        new S043();
                        break;
                }
            }
        } catch (IOException e) {
            if (counter > 9) {
                send("msg7");
                new S030();
                update();
            } else {
                send("msg4");
                send("msg4");
            }
        }
        try {
            log("trace");
        } finally {
            if (counter > 9) {
                new S083();
            }
        }
    }

    public void close() {
        new S056();
        new Abstract1();
    }

    public void start() {
        new S070();
        send("msg7");
    }

    public void stop() {
        if (counter > 1) {
            switch (event) {
                case EV0:
                    send("msg7");
                    if (counter > 3) {
                        send("msg2");
                        log("trace");
                        new S053();
                    } else {
                        send("msg7");
                        send("msg7");
                    }
                    new S038();
                    break;
                case EV4:
                    try {
                        log("trace");
                        log("trace");
                        send("msg2");
                    } catch (TimeoutException e) {
                        log("trace");
                    } finally {
                        send("msg4");
                        send("msg1");
                        send("msg1");
                    }
                    break;
            }
        }
        if (counter > 6) {
            if (counter > 5) {
                if (counter > 2) {
                    new Abstract20();
                    log("trace");
                }
            } else {
                new S088();
                switch (event) {
                    case EV0:
                        send("msg0");
                        break;
                    case EV2:
                        new S069();
                        update();
                        send("msg1");
                        break;
                    case EV5:
                        send("msg6");
                        break;
                }
                try {
                    new S057();
                } finally {
                    send("msg2");
                    new S013();
                }
            }
            send("msg1");
        }
        send("msg1");
    }

    public void tick() {
        new S099();
        new S030();
        try {
            log("trace");
            new S026();
        } finally {
            new S081();
            send("msg6");
            send("msg0");
        }
    }

    public void reset() {
        send("msg1");
        log("trace");
    }

    public void pause() {
        if (counter > 5) {
            if (counter > 2) {
                send("msg7");
            } else {
                update();
                send("msg5");
            }
            send("msg0");
            new S034();
        }
        send("msg7");
    }

    public void resume() {
        if (counter > 1) {
            switch (event) {
                case EV2:
                    send("msg0");
                    if (counter > 8) {
                        log("trace");
                    } else {
                        update();
                        new S057();
                    }
                    break;
                case EV5:
                    if (counter > 3) {
                        new S097();
                    } else {
                        update();
                        update();
                    }
                    new S051();
                    break;
                case EV1:
                    send("msg1");
                    if (counter > 2) {
                        new S079();
                    } else {
                        send("msg1");
                    }
                    break;
            }
        } else {
            switch (event) {
                case EV3:
                    send("msg5");
                    switch (event) {
                        case EV3:
                            send("msg1");
                            new S062();
                            new S037();
                            break;
                        case EV1:
                            update();
                            update();
                            break;
                    }
                    if (counter > 4) {
                        update();
                        send("msg4");
                    } else {
                        new S049();
                        send("msg4");
                        update();
                    }
                    break;
            }
        }
        try {
            send("msg7");
            update();
        } catch (IOException e) {
            new S041();
            switch (event) {
                case EV1:
                    new S067();
                    new S059();
                    send("msg1");
                    break;
                case EV5:
                    send("msg4");
                    log("trace");
                    break;
                default:
                    send("msg3");
                    break;
            }
        }
        switch (event) {
            case EV3:
                new S012();
                break;
            case EV2:
                log("trace");
                break;
            case EV4:
                new S056();
                update();
                break;
        }
    }

    public void load() {
        send("msg3");
        send("msg2");
        switch (event) {
            case EV5:
                switch (event) {
                    case EV1:
                        new S073();
                        break;
                    case EV0:
                        send("msg2");
                        break;
                    default:
                        send("msg7");
                        new S048();
                        break;
                }
                log("trace");
                break;
            case EV1:
                try {
                    try {
                        log("trace");
                    } catch (TimeoutException e) {
                        new S050();
                        update();
                    }
                } finally {
                    new S061();
                    send("msg1");
                    update();
                }
                break;
        }
    }

    public void save() {
        new S046();
    }
}
